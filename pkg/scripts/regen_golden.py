"""Regenerate the golden CLI reports in tests/golden/.

    python scripts/regen_golden.py

Only run this after a deliberate change to a report's content; the golden
test byte-compares against these files.
"""

import contextlib
import io
import json
from pathlib import Path

from secsing.cli import main

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"

def _binary_four_powers():
    # x0^7 + x1^7 + (x0+x1)^7 + (x0-x1)^7, expanded
    from math import comb

    terms = {}
    for i in range(8):
        c = comb(7, i) * (1 + (-1) ** i)
        if i in (0, 7):
            c += 1
        if c:
            terms[i] = c
    parts = []
    for i, c in sorted(terms.items()):
        mono = "*".join(p for p in (f"x0^{7 - i}" if i < 7 else "", f"x1^{i}" if i else "") if p)
        parts.append(f"{c}*{mono}")
    return " + ".join(parts)


CASES = {
    "classify_4_3_2_3": ["classify", "--k", "4", "--d", "3", "--m", "2", "--n", "3"],
    "classify_9_6_2_6": ["classify", "--k", "9", "--d", "6", "--m", "2", "--n", "6"],
    "classify4_3_3": ["classify4", "--d", "3", "--n", "3"],
    "classify4_6_4": ["classify4", "--d", "6", "--n", "4"],
    "certify_f2_d3_young": ["certify", "--poly", "x0^2*x1 + x2^3 + x3^3", "--k", "4", "--strategy", "young:1,1,1"],
    "certify_binary_d7_sym4": ["certify", "--poly", None, "--nvars", "4", "--k", "4", "--strategy", "sym:4"],
    "certify_defective_5_4_2": [
        "certify",
        "--poly",
        "x0^4 + x1^4 + x2^4 + (x0+x1+x2)^4",
        "--k",
        "5",
    ],
    "normal_forms_d3_verify": ["normal-forms", "--d", "3", "--verify"],
    "normal_forms_d4_verify": ["normal-forms", "--d", "4", "--verify"],
    "normal_forms_d5_verify": ["normal-forms", "--d", "5", "--verify"],
    "normal_forms_d6_verify": ["normal-forms", "--d", "6", "--verify"],
    "tangent_span_special": ["tangent-span", "--family", "1,t,0,0", "--d", "4", "--point", "0,0,1,0", "--k", "4"],
    "young_f2_d3": ["young", "--poly", "x0^2*x1 + x2^3 + x3^3"],
    "cat_special_a2": ["cat", "--poly", "x0^2*x1^2 + x2^4", "--nvars", "4", "--a", "2"],
}

# the parser has no parentheses, so the defective quartic is given expanded
DEFECTIVE = (
    "2*x0^4 + 4*x0^3*x1 + 4*x0^3*x2 + 6*x0^2*x1^2 + 12*x0^2*x1*x2 + 6*x0^2*x2^2"
    " + 4*x0*x1^3 + 12*x0*x1^2*x2 + 12*x0*x1*x2^2 + 4*x0*x2^3 + 2*x1^4 + 4*x1^3*x2"
    " + 6*x1^2*x2^2 + 4*x1*x2^3 + 2*x2^4 + x0^4 - 8*x0^3*x1 + 12*x0^3*x2 + 24*x0^2*x1^2"
    " - 72*x0^2*x1*x2 + 54*x0^2*x2^2 - 32*x0*x1^3 + 144*x0*x1^2*x2 - 216*x0*x1*x2^2"
    " + 108*x0*x2^3 + 16*x1^4 - 96*x1^3*x2 + 216*x1^2*x2^2 - 216*x1*x2^3 + 81*x2^4"
)


def cases():
    out = {}
    for name, argv in CASES.items():
        argv = list(argv)
        if name == "certify_binary_d7_sym4":
            argv[2] = _binary_four_powers()
        if name == "certify_defective_5_4_2":
            argv[2] = DEFECTIVE
        out[name] = argv + ["--json"]
    return out


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def regenerate():
    GOLDEN.mkdir(parents=True, exist_ok=True)
    manifest = {}
    for name, argv in cases().items():
        code, out = run(argv)
        (GOLDEN / f"{name}.json").write_text(out)
        manifest[name] = {"argv": argv, "exit": code}
        print(f"{name}: exit {code}")
    (GOLDEN / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    regenerate()
