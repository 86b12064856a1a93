"""Command-line surface.

Commands: validate, atlas, reduce, render, norm, multiply.  Exit codes:
0 success, 1 domain or validation failure, 2 inconclusive bounded search,
3 I/O or parse error.  All outputs are byte-deterministic for a fixed
input, including under ``--jobs`` parallelism.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .atlas import build_atlas, separatedness_check, transition_expression
from .elements import PAdicContext, gauss_norm, gauss_valuation
from .errors import (
    DimensionError,
    DomainError,
    InconclusiveSearchError,
    SchemaError,
)
from .fans import Fan, extend_with_faces, validate_fan
from .reduction import reduce_atlas, reduction_equals_toric_scheme
from .render import render_fan_svg
from .serialize import (
    atlas_to_json,
    dumps,
    element_from_json,
    element_to_json,
    fan_to_json,
    named_cones_from_json,
    reduction_to_json,
)


@dataclass(frozen=True)
class RunConfig:
    """Validated run options shared by the commands."""
    input_path: str
    output_path: str | None
    prime: int = 5
    bound: int = 12
    box: int | None = None
    seed: int = 0
    jobs: int = 1
    canvas: int = 512
    margin: int = 24

    def __post_init__(self):
        PAdicContext(self.prime)
        if self.bound < 1 or (self.box is not None and self.box < 1):
            raise DomainError("search bounds must be positive")
        if self.jobs < 1:
            raise DomainError("--jobs must be positive")


def _config(args) -> RunConfig:
    return RunConfig(
        input_path=args.input,
        output_path=getattr(args, "output", None),
        prime=getattr(args, "prime", 5),
        bound=getattr(args, "bound", 12),
        box=getattr(args, "box", None),
        seed=getattr(args, "seed", 0),
        jobs=getattr(args, "jobs", 1),
        canvas=getattr(args, "canvas", 512),
        margin=getattr(args, "margin", 24),
    )


def _read_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_fan(cfg: RunConfig):
    """Returns a Fan, or the violation list when validation fails."""
    named, complete = named_cones_from_json(_read_json(cfg.input_path))
    if complete:
        named = extend_with_faces(named)
    return validate_fan(named)


def cmd_validate(args) -> int:
    cfg = _config(args)
    result = _load_fan(cfg)
    if isinstance(result, Fan):
        _emit(dumps(fan_to_json(result, valid=True)), cfg.output_path)
        return 0
    _emit(dumps({"valid": False, "violations": [v.to_json() for v in result]}),
          cfg.output_path)
    return 1


def _validated_fan(cfg: RunConfig) -> Fan:
    result = _load_fan(cfg)
    if not isinstance(result, Fan):
        raise DomainError("input fan is invalid; run `torigid validate` for the report")
    return result


def cmd_atlas(args) -> int:
    cfg = _config(args)
    fan = _validated_fan(cfg)
    atlas = build_atlas(fan, jobs=cfg.jobs)
    transitions = {}
    for (a, b) in sorted(atlas.overlaps):
        transitions[(a, b)] = transition_expression(atlas, a, b)
        if a != b:
            transitions[(b, a)] = transition_expression(atlas, b, a)
    certificates = separatedness_check(atlas, bound=cfg.box, jobs=cfg.jobs)
    out = atlas_to_json(atlas, transitions=transitions, certificates=certificates)
    out["prime"] = cfg.prime
    _emit(dumps(out), cfg.output_path)
    return 0


def cmd_reduce(args) -> int:
    cfg = _config(args)
    fan = _validated_fan(cfg)
    atlas = build_atlas(fan, jobs=cfg.jobs)
    reduced = reduce_atlas(atlas, cfg.prime, jobs=cfg.jobs)
    matches, _ = reduction_equals_toric_scheme(atlas, cfg.prime)
    _emit(dumps(reduction_to_json(reduced, matches)), cfg.output_path)
    return 0


def cmd_render(args) -> int:
    cfg = _config(args)
    fan = _validated_fan(cfg)
    _emit(render_fan_svg(fan, canvas=cfg.canvas, margin=cfg.margin), cfg.output_path)
    return 0


def cmd_norm(args) -> int:
    cfg = _config(args)
    f = element_from_json(_read_json(cfg.input_path))
    v = gauss_valuation(f)
    out = {
        "prime": f.context.prime,
        "valuation": None if v == float("inf") else v,
        "norm": str(gauss_norm(f)),
    }
    _emit(dumps(out), cfg.output_path)
    return 0


def cmd_multiply(args) -> int:
    cfg = _config(args)
    f = element_from_json(_read_json(cfg.input_path))
    g = element_from_json(_read_json(args.other))
    _emit(dumps(element_to_json(f * g)), cfg.output_path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torigid",
        description="Toric rigid spaces from fans: validation, atlases, reductions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, prime=False, search=False, render=False):
        p.add_argument("input", help="input JSON file")
        p.add_argument("--output", help="write here instead of stdout")
        p.add_argument("--seed", type=int, default=0,
                       help="seed recorded in the run configuration")
        if prime:
            p.add_argument("--prime", type=int, default=5)
        if search:
            p.add_argument("--bound", type=int, default=12,
                           help="multiplicity bound for decomposition searches")
            p.add_argument("--box", type=int, default=None,
                           help="box radius for covering certificates")
            p.add_argument("--jobs", type=int, default=1,
                           help="worker threads for per-cone and per-pair work")
        if render:
            p.add_argument("--canvas", type=int, default=512)
            p.add_argument("--margin", type=int, default=24)

    p = sub.add_parser("validate", help="check the fan axioms")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("atlas", help="build the chart atlas with certificates")
    common(p, prime=True, search=True)
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("reduce", help="reduce the atlas over the prime field")
    common(p, prime=True, search=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("render", help="draw a rank-2 fan as SVG")
    common(p, render=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("norm", help="Gauss norm of an element")
    common(p)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("multiply", help="product of two elements")
    common(p)
    p.add_argument("other", help="second element JSON file")
    p.set_defaults(func=cmd_multiply)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InconclusiveSearchError as exc:
        sys.stderr.write(f"inconclusive: {exc}\n")
        return 2
    except (DomainError, DimensionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (SchemaError, json.JSONDecodeError, OSError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
