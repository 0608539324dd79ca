"""Command-line front end.

Subcommands
-----------
state     complexity of one state (gaussian, phase-diffused, photon-added,
          photon-subtracted, or a density matrix loaded from a .npy file)
channel   complexity of a channel (gaussian, phase-diffusion, photon-added,
          photon-subtracted)
figure    write the curves of one reference figure as CSV files
validate  run a validation suite (closed-forms, oracle, monotonicity, all)
rerun     re-execute a recorded run manifest and compare output hashes

Every command that writes files also writes a JSON run manifest next to
them recording the command, parameters, quadrature configuration, tool
version, output hashes, and wall-clock duration; `rerun` replays it.

Exit codes: 0 success, 1 failed validation, 2 usage error, 3 numerical
failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .errors import CvComplexityError, DomainError
from .figures import FIGURE_IDS, figure_curves
from .fock import FockDensityMatrix, complexity_from_fock
from .functionals import ComplexityValue, complexity
from .gaussian import GaussianChannelParams, channel_complexity_asymptotic
from .numerics import QuadratureConfig
from .optimizer import (
    GaussianChannelSpec,
    PhaseDiffusionChannelSpec,
    PhotonChannelSpec,
    SearchConfig,
    channel_complexity,
)
from .states import (
    GaussianStateParams,
    PhaseDiffusionParams,
    PhotonVariantParams,
    q_gaussian,
    q_phase_diffused,
    q_photon_added,
    q_photon_subtracted,
)
from .validation import run_suite

EXIT_OK = 0
EXIT_VALIDATION_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


@dataclass(frozen=True)
class RunManifest:
    """Sidecar record of a file-producing run; replaying it with `rerun`
    reproduces the outputs bit for bit."""

    command: str
    parameters: dict
    quadrature: dict
    version: str
    outputs: dict  # file name -> sha256 hex digest
    duration_seconds: float


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _write_csv(path: Path, params, values, reference=None) -> None:
    lines = ["param,complexity,reference" if reference is not None else "param,complexity"]
    for i, (p, v) in enumerate(zip(params, values)):
        row = f"{_fmt(p)},{_fmt(v)}"
        if reference is not None:
            row += f",{_fmt(reference[i])}"
        lines.append(row)
    path.write_text("\n".join(lines) + "\n")


def _write_manifest(path: Path, manifest: RunManifest) -> None:
    path.write_text(json.dumps(asdict(manifest), indent=2, sort_keys=True) + "\n")


def _quadrature_from_args(args) -> QuadratureConfig:
    return QuadratureConfig(
        angular_nodes=args.angular_nodes,
        radial_panel_order=args.radial_order,
        radial_panel_count=args.radial_panels,
        tail_tolerance=args.tail_tol,
    )


def _add_quadrature_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("quadrature")
    group.add_argument("--angular-nodes", type=int, default=256,
                       help="equispaced angular nodes (default 256)")
    group.add_argument("--radial-panels", type=int, default=24,
                       help="Gauss-Legendre panels in the radius (default 24)")
    group.add_argument("--radial-order", type=int, default=16,
                       help="Gauss-Legendre order per panel (default 16)")
    group.add_argument("--tail-tol", type=float, default=1e-12,
                       help="radial tail tolerance (default 1e-12)")


def _print_complexity(value: ComplexityValue) -> None:
    print(f"complexity          {_fmt(value.complexity)}")
    print(f"wehrl_entropy       {_fmt(value.wehrl_entropy)}")
    print(f"fisher_information  {_fmt(value.fisher_information)}")
    for key, item in value.diagnostics.items():
        print(f"{key}  {item:g}" if isinstance(item, float) else f"{key}  {item}")


# ---------------------------------------------------------------------------
# state
# ---------------------------------------------------------------------------

def _cmd_state(args) -> int:
    config = _quadrature_from_args(args)
    family = args.family
    if family == "gaussian":
        if args.mu is not None and args.nbar is not None:
            raise DomainError("give either --mu or --nbar, not both")
        mu = args.mu if args.mu is not None else 1.0 / (1.0 + 2.0 * (args.nbar or 0.0))
        params = GaussianStateParams(
            displacement=complex(args.xi or 0),
            squeezing_magnitude=args.r,
            squeezing_phase=args.theta,
            purity=mu,
        )
        field = q_gaussian(params)
    elif family == "phase-diffused":
        if args.kappa is None:
            raise DomainError("phase-diffused requires --kappa")
        field = q_phase_diffused(
            PhaseDiffusionParams(args.kappa, float(args.xi or 0), args.nbar or 0.0)
        )
    elif family in ("photon-added", "photon-subtracted"):
        variant = "added" if family == "photon-added" else "subtracted"
        maker = q_photon_added if variant == "added" else q_photon_subtracted
        field = maker(PhotonVariantParams(variant, float(args.xi or 0), args.nbar or 0.0))
    elif family == "fock-file":
        if args.path is None:
            raise DomainError("fock-file requires --path")
        rho = FockDensityMatrix(np.load(args.path))
        _print_complexity(complexity_from_fock(rho, config))
        return EXIT_OK
    else:  # pragma: no cover - argparse restricts the choices
        raise DomainError(f"unknown family {family!r}")
    _print_complexity(complexity(field, config))
    return EXIT_OK


# ---------------------------------------------------------------------------
# channel
# ---------------------------------------------------------------------------

def _report_lines(report) -> list[str]:
    lines = []
    if report.unbounded:
        lines.append("value               unbounded")
    else:
        lines.append(f"value               {_fmt(report.value)}")
    lines.append(f"attained            {report.attained}")
    if report.argmax is not None:
        lines.append(f"argmax_xi           {_fmt(report.argmax[0])}")
        lines.append(f"argmax_nbar         {_fmt(report.argmax[1])}")
    if report.boundary_optimum:
        lines.append("boundary_optimum    True")
    for key, item in report.diagnostics.items():
        lines.append(f"{key}  {item:g}" if isinstance(item, float) else f"{key}  {item}")
    return lines


def _cmd_channel(args) -> int:
    config = _quadrature_from_args(args)
    search = SearchConfig(xi_max=args.xi_max, quadrature=config)
    name = args.channel
    start = time.perf_counter()
    if name == "gaussian":
        if args.N is None or args.absM is None:
            raise DomainError("gaussian channel requires --N and --absM")
        m = args.absM * complex(math.cos(args.argM), math.sin(args.argM))
        ch = GaussianChannelParams(1.0, args.N, m)
        report = channel_complexity(GaussianChannelSpec(ch, args.gammat), search)
        for line in _report_lines(report):
            print(line)
        print(f"complexity_at_t     {_fmt(report.value)}")
        print(f"complexity_infinite {_fmt(channel_complexity_asymptotic(ch))}")
        return EXIT_OK
    if name == "phase-diffusion":
        if args.kappa is None:
            raise DomainError("phase-diffusion channel requires --kappa")
        report = channel_complexity(PhaseDiffusionChannelSpec(args.kappa), search)
        out = Path(args.output or f"phase_diffusion_kappa_{args.kappa:g}.csv")
        params = [p for p, _ in report.scan_curve]
        values = [v for _, v in report.scan_curve]
        _write_csv(out, params, values)
        manifest = RunManifest(
            command="channel-phase-diffusion",
            parameters={"kappa": args.kappa, "xi_max": args.xi_max},
            quadrature=asdict(config),
            version=__version__,
            outputs={out.name: _sha256(out)},
            duration_seconds=time.perf_counter() - start,
        )
        _write_manifest(out.with_suffix(".manifest.json"), manifest)
        for line in _report_lines(report):
            print(line)
        print(f"scan_curve_file     {out}")
        return EXIT_OK
    if name in ("photon-added", "photon-subtracted"):
        variant = "added" if name == "photon-added" else "subtracted"
        report = channel_complexity(PhotonChannelSpec(variant), search)
        for line in _report_lines(report):
            print(line)
        return EXIT_OK
    raise DomainError(f"unknown channel {name!r}")  # pragma: no cover


# ---------------------------------------------------------------------------
# figure
# ---------------------------------------------------------------------------

def _run_figure(figure_id: str, outdir: Path, config: QuadratureConfig) -> RunManifest:
    start = time.perf_counter()
    curves = figure_curves(figure_id, config)
    outdir.mkdir(parents=True, exist_ok=True)
    outputs = {}
    for curve in curves:
        path = outdir / f"{figure_id}_{curve.label}.csv"
        _write_csv(path, curve.params, curve.values, curve.reference)
        outputs[path.name] = _sha256(path)
    manifest = RunManifest(
        command="figure",
        parameters={"figure_id": figure_id},
        quadrature=asdict(config),
        version=__version__,
        outputs=outputs,
        duration_seconds=time.perf_counter() - start,
    )
    _write_manifest(outdir / f"{figure_id}.manifest.json", manifest)
    return manifest


def _cmd_figure(args) -> int:
    config = _quadrature_from_args(args)
    manifest = _run_figure(args.id, Path(args.output), config)
    for name in manifest.outputs:
        print(f"wrote {Path(args.output) / name}")
    print(f"manifest {Path(args.output) / (args.id + '.manifest.json')}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

def _cmd_validate(args) -> int:
    config = _quadrature_from_args(args)
    results = run_suite(args.suite, config)
    width = max(len(r.name) for r in results)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<{width}}  residual {r.residual:.3e}  threshold {r.threshold:.3e}")
        failed += 0 if r.passed else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VALIDATION_FAILED


# ---------------------------------------------------------------------------
# rerun
# ---------------------------------------------------------------------------

def _cmd_rerun(args) -> int:
    manifest_path = Path(args.manifest)
    recorded = json.loads(manifest_path.read_text())
    config = QuadratureConfig(
        angular_nodes=recorded["quadrature"]["angular_nodes"],
        radial_panel_order=recorded["quadrature"]["radial_panel_order"],
        radial_panel_count=recorded["quadrature"]["radial_panel_count"],
        tail_tolerance=recorded["quadrature"]["tail_tolerance"],
        r_max_sigmas=recorded["quadrature"]["r_max_sigmas"],
        max_extensions=recorded["quadrature"]["max_extensions"],
    )
    outdir = manifest_path.parent
    command = recorded["command"]
    if command == "figure":
        fresh = _run_figure(recorded["parameters"]["figure_id"], outdir, config)
        fresh_outputs = fresh.outputs
    elif command == "channel-phase-diffusion":
        search = SearchConfig(xi_max=recorded["parameters"]["xi_max"], quadrature=config)
        report = channel_complexity(
            PhaseDiffusionChannelSpec(recorded["parameters"]["kappa"]), search
        )
        name = next(iter(recorded["outputs"]))
        out = outdir / name
        _write_csv(out, [p for p, _ in report.scan_curve], [v for _, v in report.scan_curve])
        fresh_outputs = {name: _sha256(out)}
    else:
        raise DomainError(f"manifest command {command!r} cannot be rerun")
    mismatches = 0
    for name, digest in recorded["outputs"].items():
        fresh_digest = fresh_outputs.get(name)
        ok = fresh_digest == digest
        print(f"{'MATCH ' if ok else 'DIFFER'} {name}")
        mismatches += 0 if ok else 1
    return EXIT_OK if mismatches == 0 else EXIT_VALIDATION_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvcomplexity",
        description="Statistical phase-space complexity of bosonic states and channels",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_state = sub.add_parser("state", help="complexity of one state")
    p_state.add_argument(
        "family",
        choices=["gaussian", "phase-diffused", "photon-added", "photon-subtracted", "fock-file"],
    )
    p_state.add_argument("--xi", type=complex, default=None, help="displacement")
    p_state.add_argument("--nbar", type=float, default=None, help="thermal photon number")
    p_state.add_argument("--mu", type=float, default=None, help="purity (gaussian only)")
    p_state.add_argument("--r", type=float, default=0.0, help="squeezing magnitude")
    p_state.add_argument("--theta", type=float, default=0.0, help="squeezing phase")
    p_state.add_argument("--kappa", type=float, default=None, help="von Mises concentration")
    p_state.add_argument("--path", type=str, default=None, help=".npy density matrix file")
    _add_quadrature_flags(p_state)
    p_state.set_defaults(handler=_cmd_state)

    p_channel = sub.add_parser("channel", help="complexity of a channel")
    p_channel.add_argument(
        "channel",
        choices=["gaussian", "phase-diffusion", "photon-added", "photon-subtracted"],
    )
    p_channel.add_argument("--N", type=float, default=None, help="bath photon number")
    p_channel.add_argument("--absM", type=float, default=None, help="bath squeezing magnitude")
    p_channel.add_argument("--argM", type=float, default=0.0, help="bath squeezing phase")
    p_channel.add_argument("--gammat", type=float, default=math.inf,
                           help="dimensionless elapsed time Gamma*t "
                                "('inf' allowed; default inf)")
    p_channel.add_argument("--kappa", type=float, default=None, help="von Mises concentration")
    p_channel.add_argument("--xi-max", type=float, default=8.0,
                           help="displacement scan endpoint (default 8)")
    p_channel.add_argument("--output", type=str, default=None, help="scan curve CSV path")
    _add_quadrature_flags(p_channel)
    p_channel.set_defaults(handler=_cmd_channel)

    p_figure = sub.add_parser("figure", help="write figure curves as CSV")
    p_figure.add_argument("id", choices=list(FIGURE_IDS))
    p_figure.add_argument("--output", type=str, default=".", help="output directory")
    _add_quadrature_flags(p_figure)
    p_figure.set_defaults(handler=_cmd_figure)

    p_validate = sub.add_parser("validate", help="run a validation suite")
    p_validate.add_argument("suite", choices=["closed-forms", "oracle", "monotonicity", "all"])
    _add_quadrature_flags(p_validate)
    p_validate.set_defaults(handler=_cmd_validate)

    p_rerun = sub.add_parser("rerun", help="replay a run manifest and compare hashes")
    p_rerun.add_argument("manifest", type=str)
    p_rerun.set_defaults(handler=_cmd_rerun)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CvComplexityError, FileNotFoundError, OSError, ValueError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
