#!/usr/bin/env python3
"""Smoke test for the whittaker_py extension module.

Builds nothing itself: run `cargo build -p whittaker-py --release` first,
then `python3 python/smoke_test.py`. Copies the cdylib into a temp dir
under the importable name and checks a handful of known values.
"""

import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_cdylib():
    names = ["libwhittaker_py.so", "libwhittaker_py.dylib", "whittaker_py.dll"]
    for profile in ("release", "debug"):
        for name in names:
            candidate = ROOT / "target" / profile / name
            if candidate.exists():
                return candidate
    sys.exit(
        "whittaker_py cdylib not found; run `cargo build -p whittaker-py --release`"
    )


def import_module():
    src = locate_cdylib()
    tmp = tempfile.mkdtemp(prefix="whittaker_py_")
    suffix = ".so" if src.suffix in (".so", ".dylib") else ".pyd"
    shutil.copy2(src, pathlib.Path(tmp) / ("whittaker_py" + suffix))
    sys.path.insert(0, tmp)
    import whittaker_py

    return whittaker_py


FAILURES = []


def check(name, got, want=None):
    ok = bool(got) if want is None else got == want
    print(("PASS " if ok else "FAIL ") + name)
    if not ok:
        FAILURES.append(f"{name}: got {got!r}" + ("" if want is None else f", want {want!r}"))


def main():
    w = import_module()

    types = w.supported_types()
    check("supported_types count", len(types), 10)
    check("supported_types contains D4", "D4" in types)

    check("weyl_order A2", w.weyl_order("A2"), 6)
    check("weyl_order D4", w.weyl_order("D4"), 192)
    check("positive_root_count G2", w.positive_root_count("G2"), 6)
    check("longest_word A2", w.longest_word("A2"), [1, 2, 1])

    check("eval at origin", w.eval_whittaker("A1", [0], ""), "1")
    check("eval outside support", w.eval_whittaker("A1", [-1], ""), "0")
    check("eval symbolic", w.eval_whittaker("A1", [2], "1"), "-z1^2*q^-3")
    check("chi_delta A1", w.chi_delta("A1", [1]), "z1*q^-1")

    check(
        "eval specialized diagonal",
        w.eval_whittaker_at("A1", [1], "", ["1/2"], 3),
        "1/6",
    )
    check(
        "eval specialized cell",
        w.eval_whittaker_at("A1", [0], "1", ["1/2"], 3),
        "-1/3",
    )

    check("dominance_shift A1 s", w.dominance_shift("A1", "1"), [-1])
    check("shifted cone contains -1", w.is_w_dominant("A1", [-1], "1"), True)
    check("plain cone excludes -1", w.is_w_dominant("A1", [-1], ""), False)

    suites = w.verify_suites("B2")
    check("verify_suites B2 count", len(suites), 4)
    check("verify_suites B2 all pass", all(p for _, _, p in suites), True)

    census = w.cell_census(3, 2)
    check("census total", sum(census.values()), 21)
    check("census identity cell", census["e"], 1)
    check("census big cell", census["1,2,1"], 8)

    agree = w.padic_agreement(0, "e", "1", 3, 1e-6)
    check("oracle agrees at twist point", agree["pass"], True)
    deviate = w.padic_agreement(1, "e", "1/2", 3, 1e-6)
    check("oracle deviates at generic z", deviate["pass"], False)

    try:
        w.weyl_order("Z9")
        check("bad type raises ValueError", False)
    except ValueError:
        check("bad type raises ValueError", True)

    if FAILURES:
        print(f"\n{len(FAILURES)} failure(s):")
        for f in FAILURES:
            print("  " + f)
        sys.exit(1)
    print("\nall smoke checks passed")


if __name__ == "__main__":
    main()
