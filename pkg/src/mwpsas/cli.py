"""Command line entry point.

Reports go to stdout as ``key value`` lines; diagnostics go to stderr.
Exit status is 0 on success, 1 on domain errors and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import formats
from .approx import STRATEGIES, approximate_partition, deviation_bound, lower_bound
from .errors import DigestMismatchError, InternalInvariantError, MwpsasError
from .exact import Decision, exact_solve
from .generate import VARIANTS, generate_instance
from .model import Instance, Partition, evaluate_objective
from .reductions import reduce_clique, reduce_part3_m1, reduce_part3_n1
from .sched import lpt_partition


@dataclass
class RunReport:
    instance_digest: str
    strategy: str
    f_value: int
    d_value: int
    lower_bound: int
    deviation_bound: int
    exact_optimum: Optional[int]
    elapsed: float

    def lines(self) -> list[str]:
        out = [
            f"instance_digest {self.instance_digest}",
            f"strategy {self.strategy}",
            f"f_value {self.f_value}",
            f"d_value {self.d_value}",
            f"lower_bound {self.lower_bound}",
            f"deviation_bound {self.deviation_bound}",
        ]
        if self.exact_optimum is not None:
            out.append(f"exact_optimum {self.exact_optimum}")
        out.append(f"elapsed {self.elapsed:.6f}")
        return out


def _emit(lines: Sequence[str]) -> None:
    sys.stdout.write("".join(line + "\n" for line in lines))


def _block_lines(part: Partition) -> list[str]:
    return [f"block_{e} " + " ".join(map(str, sorted(b))) for e, b in enumerate(part.blocks, 1)]


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_instance(path: str) -> Instance:
    return formats.parse_instance(_read(path))


def _verified(inst: Instance, part: Partition, claimed: int) -> int:
    f = evaluate_objective(inst, part)
    if f != claimed:
        raise InternalInvariantError(f"reported objective {claimed} but recomputed {f}")
    return f


def cmd_solve(args) -> int:
    inst = _load_instance(args.instance)
    start = time.perf_counter()
    init = STRATEGIES[args.strategy](inst)
    part, f = approximate_partition(inst, init)
    _verified(inst, part, f)
    bound = deviation_bound(inst, init)
    optimum = None
    if args.exact:
        optimum = exact_solve(inst, args.time_budget).optimum
    digest = formats.instance_digest(inst)
    report = RunReport(
        digest, args.strategy, f, bound.d_value, bound.lower_bound, bound.deviation_bound,
        optimum, time.perf_counter() - start,
    )
    if args.partition_out:
        Path(args.partition_out).write_text(formats.write_partition(part, digest), encoding="utf-8")
    _emit(report.lines() + _block_lines(part))
    return 0


def _find_target(args, inst: Instance) -> Optional[int]:
    if args.target is not None:
        return args.target
    path = Path(args.decision) if args.decision else Path(args.instance).with_suffix(".dec")
    if not path.exists():
        if args.decision:
            raise MwpsasError(f"decision file {path} not found")
        return None
    side = formats.parse_decision(path.read_text(encoding="utf-8"))
    if side.digest != formats.instance_digest(inst):
        if args.decision:
            raise DigestMismatchError(f"{path} does not belong to {args.instance}")
        return None
    return side.target


def cmd_exact(args) -> int:
    inst = _load_instance(args.instance)
    target = _find_target(args, inst)
    start = time.perf_counter()
    res = exact_solve(inst, args.time_budget)
    _verified(inst, res.witness, res.optimum)
    lines = [
        f"instance_digest {formats.instance_digest(inst)}",
        f"optimum {res.optimum}",
        f"lower_bound {lower_bound(inst)}",
        f"nodes_explored {res.nodes_explored}",
        f"timed_out {str(res.timed_out).lower()}",
    ]
    if target is not None:
        if res.optimum <= target:
            decision = Decision.YES
        elif target < lower_bound(inst):
            decision = Decision.NO
        else:
            decision = Decision.UNKNOWN if res.timed_out else Decision.NO
        lines += [f"target {target}", f"decision {decision.value}"]
    lines.append(f"elapsed {time.perf_counter() - start:.6f}")
    _emit(lines + _block_lines(res.witness))
    return 0


def cmd_bound(args) -> int:
    inst = _load_instance(args.instance)
    rep = deviation_bound(inst, STRATEGIES[args.strategy](inst))
    _emit([
        f"instance_digest {formats.instance_digest(inst)}",
        f"strategy {args.strategy}",
        f"d_value {rep.d_value}",
        f"lower_bound {rep.lower_bound}",
        f"deviation_bound {rep.deviation_bound}",
    ])
    return 0


def cmd_reduce(args) -> int:
    if args.source == "clique":
        dec = reduce_clique(formats.parse_graph(_read(args.graph)), args.k)
    else:
        p3 = formats.parse_part3(_read(args.part3))
        dec = (reduce_part3_m1 if args.source == "part3-m1" else reduce_part3_n1)(p3)
    out = Path(args.out)
    inst_path, dec_path = out.with_suffix(".mwp"), out.with_suffix(".dec")
    inst_path.write_text(formats.write_instance(dec.instance), encoding="utf-8")
    dec_path.write_text(formats.write_decision(dec), encoding="utf-8")
    _emit([
        f"source {args.source}",
        f"instance_file {inst_path}",
        f"decision_file {dec_path}",
        f"instance_digest {formats.instance_digest(dec.instance)}",
        f"n_count {dec.instance.n_count}",
        f"m_count {dec.instance.m_count}",
        f"machines {dec.instance.machines}",
        f"target {dec.target}",
    ])
    return 0


def cmd_gen(args) -> int:
    inst = generate_instance(
        args.seed, args.n, args.m_set, args.machines, args.max_weight, args.variant
    )
    text = formats.write_instance(inst)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    inst = _load_instance(args.instance)
    part = formats.parse_partition(_read(args.partition), inst)
    f = evaluate_objective(inst, part)
    _emit([
        f"instance_digest {formats.instance_digest(inst)}",
        "valid true",
        f"blocks {len(part)}",
        f"machines {inst.machines}",
        f"block_count_matches {str(len(part) == inst.machines).lower()}",
        f"f_value {f}",
    ])
    return 0


def cmd_lpt(args) -> int:
    inst = _load_instance(args.instance)
    part, f = lpt_partition(inst)
    _verified(inst, part, f)
    _emit([
        f"instance_digest {formats.instance_digest(inst)}",
        "strategy lpt",
        f"f_value {f}",
        f"lower_bound {lower_bound(inst)}",
    ] + _block_lines(part))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mwpsas", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run the threshold heuristic")
    p.add_argument("--instance", required=True)
    p.add_argument("--strategy", choices=sorted(STRATEGIES), default="whole")
    p.add_argument("--exact", action="store_true", help="also compute the optimum")
    p.add_argument("--time-budget", type=float, default=None, help="seconds for --exact")
    p.add_argument("--partition-out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help="branch and bound optimum")
    p.add_argument("--instance", required=True)
    p.add_argument("--time-budget", type=float, default=None)
    p.add_argument("--target", type=int, help="decision threshold C")
    p.add_argument("--decision", help="decision file holding C (default: sibling .dec)")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bound", help="threshold, lower bound and deviation bound")
    p.add_argument("--instance", required=True)
    p.add_argument("--strategy", choices=sorted(STRATEGIES), default="whole")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("reduce", help="build a decision instance from CLIQUE or 3-PARTITION")
    rsub = p.add_subparsers(dest="source", required=True)
    r = rsub.add_parser("clique")
    r.add_argument("--graph", required=True)
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--out", required=True, help="path prefix for .mwp and .dec files")
    for name in ("part3-m1", "part3-n1"):
        r = rsub.add_parser(name)
        r.add_argument("--part3", required=True)
        r.add_argument("--out", required=True, help="path prefix for .mwp and .dec files")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="seeded random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-set", type=int, required=True)
    p.add_argument("--machines", type=int, required=True)
    p.add_argument("--max-weight", type=int)
    p.add_argument("--variant", choices=VARIANTS, default="general")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a partition and recompute its objective")
    p.add_argument("--instance", required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lpt", help="LPT baseline on an N1 instance")
    p.add_argument("--instance", required=True)
    p.set_defaults(func=cmd_lpt)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except (MwpsasError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
