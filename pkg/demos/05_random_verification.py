"""The randomized harness: seeded corpora, falsify-or-confirm suites, replays.

Identical parameters always reproduce the same corpus (the digest pins it).
Each suite either confirms a structural fact on every instance or returns
concrete counterexamples; the fault-injection flag proves the suites can
actually fail.
"""

from relhom.verifier import (
    EXAMPLE_IDS,
    CorpusParams,
    corpus_digest,
    reproduce_example,
    run_all_suites,
)

params = CorpusParams(count=40, seed=42)
print("corpus digest:", corpus_digest(params))

run = run_all_suites(params)
print(f"all suites passed: {run.passed}")
for name, result in run.suites.items():
    extra = f", non-vacuous {result.non_vacuous}" if result.non_vacuous is not None else ""
    print(f"  {name:16s} instances {result.instances:3d}  violations {len(result.violations)}{extra}")

print()
print("fault injection (must produce violations):")
broken = run_all_suites(CorpusParams(count=5), fault_injection=True)
print("  violations:", sum(len(r.violations) for r in broken.suites.values()))
print("  first counterexample:", broken.counterexample_lines[0][:120], "...")

print()
print("bundled worked examples replay bit-exactly:")
for example_id in EXAMPLE_IDS:
    result = reproduce_example(example_id)
    print(f"  example {example_id}: {'PASS' if result.passed else 'FAIL'} ({result.instances} checks)")
