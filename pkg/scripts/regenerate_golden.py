#!/usr/bin/env python3
"""Rewrite tests/golden/certify_all.jsonl from the current certificate engine.

Only run after a deliberate change to the certificate format; review the diff.
"""

from pathlib import Path

from quintic_descent import certify

out = Path(__file__).resolve().parents[1] / "tests" / "golden" / "certify_all.jsonl"
certs = certify.run_all()
bad = [m for cert in certs for m in certify.check_certificate(cert)]
if bad:
    raise SystemExit("refusing to write golden file:\n" + "\n".join(bad))
out.write_text("\n".join(certify.suite_lines(certs)) + "\n", encoding="utf-8")
print(f"wrote {out}")
