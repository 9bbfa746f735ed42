"""Command-line front end.

    cyclesight preset <name> --out DIR
    cyclesight run --matrix "a b c d" [--algo qr|lr] [--steps N]
                   [--conv plain|negdetflip] [--shift none|rayleigh|wilkinson]
                   [--model axis|disk] [--svg] [--json] [--out DIR]
    cyclesight classify --matrix "a b c d"
    cyclesight serve [--port P] [--static DIR] [--stdio]

Exit codes: 0 success, 2 usage error, 3 I/O failure.  Outputs are
deterministic: identical invocations write byte-identical files.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path

from .config import active
from .errors import CycleSightError
from .liegeom import Model
from .mat2 import Algo, Mat2, QrConvention, ShiftStrategy, trajectory
from .presets import PRESETS, preset_trajectory, verify_preset
from .report import build_report, canonical_json, flatten_report, trajectory_metrics
from .scenes import Viewport, emit_scene_json, emit_svg, scene_v2

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3


def _parse_matrix(text: str) -> Mat2:
    parts = text.replace(",", " ").split()
    if len(parts) != 4:
        raise ValueError("expected four entries: \"a b c d\"")
    m = Mat2(*(float(p) for p in parts))
    if m.is_zero():
        raise ValueError("the zero matrix is not accepted")
    return m


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _trajectory_payload(mats, algo, conv, shift, model) -> dict:
    return {
        "algo": algo.value,
        "conv": conv.value,
        "shift": shift.value,
        "model": model.value,
        "steps": len(mats) - 1,
        "matrices": [list(m.entries()) for m in mats],
    }


def _write_outputs(out_dir: Path, mats, algo, conv, shift, model, want_svg, want_json, extra=None):
    tol = active()
    scene = scene_v2(mats, model, Viewport(), tol)
    report = build_report(mats[0], tol)
    report["trajectory"] = trajectory_metrics(mats, tol)
    if extra:
        report.update(extra)
    _atomic_write(out_dir / "trajectory.json", canonical_json(_trajectory_payload(mats, algo, conv, shift, model)))
    _atomic_write(out_dir / "report.json", canonical_json(report))
    if want_svg:
        _atomic_write(out_dir / "scene.svg", emit_svg(scene, Viewport()))
    if want_json:
        _atomic_write(out_dir / "scene.json", emit_scene_json(scene) + b"\n")


def _cmd_preset(args) -> int:
    name = args.name
    if name not in PRESETS:
        known = ", ".join(sorted(PRESETS))
        print(f"unknown preset {name!r}; known presets: {known}", file=sys.stderr)
        return EXIT_USAGE
    p = PRESETS[name]
    mats = preset_trajectory(p)
    marker = verify_preset(name)
    out_dir = Path(args.out) / name
    try:
        _write_outputs(
            out_dir, mats, p.algo, p.conv, p.shift, p.model, True, True, extra={"marker": marker}
        )
    except OSError as exc:
        print(f"cannot write outputs: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"{name}: wrote {out_dir}/trajectory.json, scene.svg, scene.json, report.json")
    return EXIT_OK


def _cmd_run(args) -> int:
    try:
        m = _parse_matrix(args.matrix)
        algo = Algo(args.algo)
        conv = QrConvention(args.conv)
        shift = ShiftStrategy(args.shift)
        model = Model(args.model)
        mats = trajectory(m, args.steps, algo, conv, shift)
    except (ValueError, CycleSightError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    want_svg, want_json = args.svg, args.json
    if not want_svg and not want_json:
        want_svg = want_json = True
    out_dir = Path(args.out)
    try:
        _write_outputs(out_dir, mats, algo, conv, shift, model, want_svg, want_json)
    except OSError as exc:
        print(f"cannot write outputs: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote outputs to {out_dir}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    try:
        m = _parse_matrix(args.matrix)
        report = flatten_report(build_report(m))
    except (ValueError, CycleSightError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(canonical_json(report).decode("utf-8"))
    return EXIT_OK


def _cmd_serve(args) -> int:
    from . import bridge

    if args.stdio:
        bridge.run_stdio()
        return EXIT_OK
    static = Path(args.static) if args.static else None
    bridge.run_http(args.port, static_dir=static)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclesight", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("preset", help="run a named scenario preset")
    p.add_argument("name")
    p.add_argument("--out", default="out", help="output directory (default: out)")
    p.set_defaults(func=_cmd_preset)

    r = sub.add_parser("run", help="iterate an arbitrary matrix and emit scenes")
    r.add_argument("--matrix", required=True, help='four entries "a b c d" (row-major)')
    r.add_argument("--algo", choices=[a.value for a in Algo], default="qr")
    r.add_argument("--steps", type=int, default=20)
    r.add_argument("--conv", choices=[c.value for c in QrConvention], default="plain")
    r.add_argument("--shift", choices=[s.value for s in ShiftStrategy], default="none")
    r.add_argument("--model", choices=[m.value for m in Model], default="disk")
    r.add_argument("--svg", action="store_true", help="emit scene.svg")
    r.add_argument("--json", action="store_true", help="emit scene.json")
    r.add_argument("--out", default="out")
    r.set_defaults(func=_cmd_run)

    c = sub.add_parser("classify", help="print the classification report")
    c.add_argument("--matrix", required=True)
    c.set_defaults(func=_cmd_classify)

    s = sub.add_parser("serve", help="start the interactive session bridge")
    s.add_argument("--port", type=int, default=8642)
    s.add_argument("--static", help="directory of UI assets to serve at /")
    s.add_argument("--stdio", action="store_true", help="speak the protocol on stdin/stdout")
    s.set_defaults(func=_cmd_serve)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
