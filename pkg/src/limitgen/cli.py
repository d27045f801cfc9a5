"""Command-line entry point wiring fixtures, algorithms, experiments, and
traces.

Every run is fully determined by its flags; all randomness flows from a
single ``--seed`` (omitting it picks a random seed and prints it on
stderr so the run stays replayable).  Exit codes: 0 success, 2 usage,
3 runtime cap or diagnostic.
"""

from __future__ import annotations

import argparse
import secrets
import sys

import numpy as np

from .core import Sample
from .errors import (BitBoundExceeded, ConfigError, DiscoveryCap, Exhausted,
                     InsufficientData, InvalidEnumeration, IterationCap)
from .fixtures import FIXTURES, make_fixture
from .generate import (KMState, best_of_both_generate, generation_error,
                       km_membership_generate, km_subset_generate,
                       trivial_generate)
from .harness import (ALGORITHMS, ExperimentConfig, estimate_curve,
                      gnuplot_script, write_curve_csv)
from .identify import canonicalize_index
from .mop import MACHINES, mop_decide
from .reductions import (cheating_trainer, identify_via_breadth_generator,
                         identify_via_unambiguous)
from .sampling import (adversarial_enumeration, labeled_distribution_for,
                       labeled_stream)

USAGE_ERRORS = (ConfigError, InvalidEnumeration, ValueError, KeyError, LookupError)
RUNTIME_ERRORS = (IterationCap, DiscoveryCap, BitBoundExceeded, Exhausted,
                  InsufficientData)


def _resolve_seed(seed):
    if seed is not None:
        return seed
    fresh = secrets.randbelow(2 ** 31)
    print(f"seed: {fresh}", file=sys.stderr)
    return fresh


def _parse_positive_sample(text):
    return [int(tok) for tok in text.split(",") if tok]


def _parse_labeled_sample(text):
    pairs = []
    for tok in text.split(","):
        if not tok:
            continue
        x, _, y = tok.partition(":")
        pairs.append((int(x), int(y)))
    return pairs


def cmd_fixtures(args) -> int:
    print("name,languages,target_index,identifiable,trivial_for_generation,horizon")
    for name in sorted(FIXTURES):
        coll = make_fixture(name)
        meta = coll.meta
        size = coll.size if coll.size is not None else "inf"
        print(f"{name},{size},{meta.target_index},"
              f"{int(meta.known_identifiable)},"
              f"{int(meta.known_trivial_for_generation)},{meta.index_horizon}")
    return 0


def _trace_items(args, collection, labeled):
    if args.sample:
        if labeled:
            items = _parse_labeled_sample(args.sample)
        else:
            items = _parse_positive_sample(args.sample)
        t_max = args.t_max or len(items) + 1
        return items, t_max
    t_max = args.t_max or 10
    target = collection.language(collection.meta.target_index)
    if labeled:
        stream = labeled_stream(labeled_distribution_for(collection), args.seed)
    else:
        stream = adversarial_enumeration(target, args.schedule)
    return stream.prefix(t_max), t_max


def cmd_trace(args) -> int:
    collection = make_fixture(args.fixture)
    spec = ALGORITHMS.get(args.algo)
    if spec is None:
        raise ConfigError(
            f"unknown algorithm {args.algo!r}; valid: {', '.join(sorted(ALGORITHMS))}")
    args.seed = _resolve_seed(args.seed)
    items, t_max = _trace_items(args, collection, spec.labeled)
    meta = collection.meta
    lines = []
    if spec.kind == "identify":
        lines.append("t,guess,canonicalized_guess,correct")
        cfg = ExperimentConfig(args.fixture, args.algo, (1,), seed=args.seed)
        for t in range(1, t_max + 1):
            sample = Sample(items[:min(t, len(items))], is_labeled=spec.labeled)
            rng = np.random.default_rng([args.seed, t])
            guess = spec.run(collection, sample, rng, cfg)
            canon = canonicalize_index(collection, guess, max(len(sample), 1))
            lines.append(f"{t},{guess},{canon},{int(meta.equality_oracle(canon))}")
    else:
        lines.append("t,emitted,error")
        state = None
        for t in range(1, t_max + 1):
            sample = Sample.positive(items[:min(t, len(items))])
            rng = np.random.default_rng([args.seed, t])
            if args.algo == "km-subset":
                emitted = km_subset_generate(collection, sample, t)
            elif args.algo == "km-membership":
                base = KMState.from_sample(sample)
                if state is not None:
                    base = KMState(t=len(sample), m=max(state.m, base.m))
                emitted, state = km_membership_generate(collection, sample, base)
            elif args.algo == "trivial":
                emitted = trivial_generate(collection, sample)
            elif args.algo == "best-of-both":
                emitted = best_of_both_generate(collection, sample, t).sample(rng)
            else:
                raise ConfigError(f"{args.algo} has no trace mode")
            err = generation_error(collection, sample, emitted=emitted)
            lines.append(f"{t},{emitted},{err}")
    out = "\n".join(lines) + "\n"
    sys.stdout.write(out)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    return 0


def cmd_curve(args) -> int:
    args.seed = _resolve_seed(args.seed)
    if args.n_grid:
        grid = tuple(_parse_positive_sample(args.n_grid))
    else:
        grid = tuple(range(1, args.n_max + 1))
    config = ExperimentConfig(
        fixture=args.fixture, algo=args.algo, n_grid=grid, trials=args.trials,
        seed=args.seed, error_mode=args.error_mode, window=args.window)
    curve = estimate_curve(config)
    if args.out:
        write_curve_csv(curve, args.out)
        if args.gnuplot:
            with open(args.out + ".gp", "w", encoding="utf-8", newline="\n") as fh:
                fh.write(gnuplot_script(args.out))
    else:
        sys.stdout.write(curve.to_csv())
    return 0


def cmd_reduce(args) -> int:
    collection = make_fixture(args.fixture)
    args.seed = _resolve_seed(args.seed)
    meta = collection.meta
    if args.trainer.startswith("cheat:"):
        z = int(args.trainer.split(":", 1)[1])
        trainer = cheating_trainer(collection, z)
    elif args.trainer == "km-bob":
        trainer = lambda s: best_of_both_generate(collection, s, t=max(len(s), 1))
    else:
        raise ConfigError(f"unknown trainer {args.trainer!r}")
    target = collection.language(meta.target_index)
    stream = adversarial_enumeration(target, args.schedule)
    print("t,guess,correct")
    for t in range(1, args.t_max + 1):
        if args.mode == "breadth":
            guess = identify_via_breadth_generator(trainer, stream, t, collection)
        elif args.mode == "unambiguous":
            guess = identify_via_unambiguous(trainer, stream, t, collection,
                                             window=args.window)
        else:
            raise ConfigError(f"unknown reduce mode {args.mode!r}")
        canon = canonicalize_index(collection, guess, max(t, 1))
        print(f"{t},{guess},{int(meta.equality_oracle(canon))}")
    return 0


def cmd_mop(args) -> int:
    machine = MACHINES.get(args.machine)
    if machine is None:
        raise ConfigError(
            f"unknown machine {args.machine!r}; valid: {', '.join(sorted(MACHINES))}")
    verdict = mop_decide(machine, args.string, prefix_mode=args.prefix)
    print("Yes" if verdict.answer else "No")
    if verdict.answer:
        steps = ";".join("".join(map(str, bits)) or "-" for bits in verdict.witness)
        print(f"witness: {steps}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="limitgen",
        description="Simulations of language identification and generation in the limit")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("fixtures", help="list the fixture registry").set_defaults(
        func=cmd_fixtures)

    trace = sub.add_parser("trace", help="per-step guesses or emissions")
    trace.add_argument("--fixture", required=True, choices=sorted(FIXTURES))
    trace.add_argument("--algo", required=True)
    trace.add_argument("--sample", help="explicit sample: 2,6 or labeled 2:1,1:0")
    trace.add_argument("--t-max", type=int)
    trace.add_argument("--seed", type=int)
    trace.add_argument("--schedule", default="canonical",
                       help="canonical or delayed:<d>")
    trace.add_argument("--window", type=int, default=200)
    trace.add_argument("--out")
    trace.set_defaults(func=cmd_trace)

    curve = sub.add_parser("curve", help="Monte Carlo learning curve")
    curve.add_argument("--fixture", required=True, choices=sorted(FIXTURES))
    curve.add_argument("--algo", required=True)
    curve.add_argument("--n-max", type=int, default=40)
    curve.add_argument("--n-grid", help="explicit grid: 1,2,5,10")
    curve.add_argument("--trials", type=int, default=2000)
    curve.add_argument("--seed", type=int)
    curve.add_argument("--error-mode", choices=(
        "identify", "generate-consistency", "generate-breadth", "unambiguous"))
    curve.add_argument("--window", type=int, default=200)
    curve.add_argument("--out")
    curve.add_argument("--gnuplot", action="store_true",
                       help="also emit a gnuplot script next to --out")
    curve.set_defaults(func=cmd_curve)

    reduce_p = sub.add_parser("reduce", help="generator-to-identifier reductions")
    reduce_p.add_argument("--mode", required=True, choices=("breadth", "unambiguous"))
    reduce_p.add_argument("--trainer", required=True,
                          help="cheat:<z> or km-bob")
    reduce_p.add_argument("--fixture", required=True, choices=sorted(FIXTURES))
    reduce_p.add_argument("--t-max", type=int, default=10)
    reduce_p.add_argument("--window", type=int, default=None)
    reduce_p.add_argument("--seed", type=int)
    reduce_p.add_argument("--schedule", default="canonical")
    reduce_p.set_defaults(func=cmd_reduce)

    mop_p = sub.add_parser("mop", help="decide support membership of a string")
    mop_p.add_argument("--machine", required=True)
    mop_p.add_argument("--string", required=True)
    mop_p.add_argument("--prefix", action="store_true",
                       help="ask for prefix membership instead")
    mop_p.set_defaults(func=cmd_mop)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except RUNTIME_ERRORS as exc:
        print(f"limitgen: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 3
    except USAGE_ERRORS as exc:
        print(f"limitgen: usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
