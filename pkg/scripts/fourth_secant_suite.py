"""Young flattening ranks and conormal dimensions of the four-variable normal
forms for d = 3..6, followed by the certifier verdict for each.

    python scripts/fourth_secant_suite.py
"""

import time

from secsing.certify import NORMAL_FORM_IDS, Young, certify_point, normal_form, verify_fourth_secant_suite


def main():
    for d in range(3, 7):
        t0 = time.perf_counter()
        rep = verify_fourth_secant_suite(d)
        verdicts = {
            name: certify_point(normal_form(name, d), 4, Young(d - 2, 1, 1)).verdict.value
            for name in NORMAL_FORM_IDS
            if name != "f1"
        }
        print(f"d={d}: {'PASS' if rep.passed else 'FAIL'} ({time.perf_counter() - t0:.2f}s)")
        for row in rep.rows:
            v = verdicts.get(row.name, "-")
            print(f"  {row.name}: rank {row.yf_rank}, conormal {row.conormal_dim}/{row.expected}, certify {v}")


if __name__ == "__main__":
    main()
