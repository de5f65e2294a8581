import re
import sys
import traceback
from importlib import import_module
from pathlib import Path
from time import perf_counter
from typing import Callable, List


def setup():
    from argparse import ArgumentParser

    parser = ArgumentParser()
    parser.add_argument("-p", "--profile", action="store_true")
    parser.add_argument("-d",
                        "--dir",
                        default=".",
                        type=Path,
                        help="test directory")
    parser.add_argument("-f",
                        "--file",
                        default=".*",
                        type=re.compile,
                        help="regex for file name (test_<regex>.py)")
    parser.add_argument("-m",
                        "--method",
                        default=".*",
                        type=re.compile,
                        help="regex for method name (test_<regex>)")
    parser.add_argument("-x",
                        "--exitfirst",
                        action="store_true",
                        help="stop at the first failing test")
    return parser.parse_args()


def collect(test_dir: Path, file_pattern: re.Pattern,
            method_pattern: re.Pattern) -> List[Callable[[], None]]:
    functions = []
    for path in sorted(test_dir.glob("test_*.py")):
        if file_pattern.search(path.stem[5:]):
            module = import_module(f"{test_dir}.{path.stem}".lstrip("."))
            for name in dir(module):
                f = getattr(module, name)
                if name.startswith("test_") and callable(f):
                    if method_pattern.search(name[5:]):
                        functions.append(f)
    return functions


def run_one(f: Callable[[], None]) -> bool:
    start = perf_counter()
    try:
        f()
    except Exception:
        print(f"[{f.__name__}] FAILED")
        traceback.print_exc()
        return False
    print(f"[{f.__name__}] ok ({perf_counter() - start:.2f}s)")
    return True


def run_tests(
    test_dir: Path,
    file_pattern: re.Pattern,
    method_pattern: re.Pattern,
    profile: bool,
    exitfirst: bool,
) -> int:
    functions = collect(test_dir, file_pattern, method_pattern)
    failed = []
    if profile:
        import cProfile
        import pstats

        profiler = cProfile.Profile()
        for f in functions:
            profiler.enable()
            ok = run_one(f)
            profiler.disable()
            if not ok:
                failed.append(f.__name__)
                if exitfirst:
                    break

        print("=" * 80)
        stat = pstats.Stats(profiler).sort_stats("cumulative")
        stat.print_stats(30)
    else:
        for f in functions:
            if not run_one(f):
                failed.append(f.__name__)
                if exitfirst:
                    break

    print("=" * 80)
    print(f"{len(functions) - len(failed)} passed, {len(failed)} failed")
    for name in failed:
        print(f"  {name}")
    return 1 if failed else 0


def main():
    args = setup()
    sys.exit(
        run_tests(args.dir, args.file, args.method, args.profile,
                  args.exitfirst))


if __name__ == "__main__":
    main()
