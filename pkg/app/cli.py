"""
Command line entry point.

    monopole family --name sp2 --emit sp2.json
    monopole verify --data sp2.json --domain ray
    monopole fields --data sp2.json --ray 0:0.99:200 --emit csv

Exit status is 0 on success, 1 on usage errors and 2 when data fails
validation or a computation is refused.
"""
import argparse
import csv
import io
import json
import sys
from logging import DEBUG, WARNING, basicConfig, getLogger
from typing import Any, Dict, List, NoReturn, Optional, Sequence, TextIO

import numpy as np

from app.core.adhm import AdhmData, Domain, validate
from app.core.bweb import compute_B, realize_B_real, verify_identities
from app.core.errors import ConstructionInvalid, DimensionMismatch, MonopoleError
from app.core.fields import higgs_boundary_eigenvalues, ray_profile
from app.core.observables import rational_map, spectral_curve, spectral_polynomial
from app.core.profiles import REFERENCE_PROFILES
from app.core.suirrep import ReprTriple, complex_irrep, decompose, real_irrep
from app.core.symmetry import (
    AnsatzSpec,
    Family,
    build_family,
    induced_structure_rep,
    structure_ansatz,
    structure_group_bounds,
)

__all__ = ["RunConfig", "UsageError", "build_parser", "run", "main"]

logger = getLogger(__name__)

RunConfig = argparse.Namespace

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _parse_params(text: Optional[str]) -> Dict[str, float]:
    params: Dict[str, float] = {}
    if not text:
        return params
    for item in text.split(","):
        name, separator, value = item.partition("=")
        if not separator:
            raise UsageError(f"--params expects name=value pairs, got {item!r}")
        try:
            params[name.strip()] = float(value)
        except ValueError as error:
            raise UsageError(f"--params value for {name!r} is not a number") from error
    return params


def _parse_integers(text: str, flag: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as error:
        raise UsageError(f"{flag} expects comma separated integers, got {text!r}") from error


def _parse_floats(text: str, flag: str) -> List[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as error:
        raise UsageError(f"{flag} expects comma separated numbers, got {text!r}") from error


def _parse_ray(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"--ray expects start:stop:count, got {text!r}")
    try:
        return np.linspace(float(parts[0]), float(parts[1]), int(parts[2]))
    except ValueError as error:
        raise UsageError(f"--ray expects start:stop:count, got {text!r}") from error


def _read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except (OSError, ValueError) as error:
        raise UsageError(f"cannot read {path}: {error}") from error


def _load_data(path: str) -> AdhmData:
    payload = _read_json(path)
    try:
        return AdhmData.from_dict(payload.get("data", payload))
    except (KeyError, TypeError, ValueError, AttributeError, DimensionMismatch) as error:
        raise UsageError(f"--data {path}: malformed ADHM data: {error!r}") from error


def _open_output(path: Optional[str]) -> TextIO:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="")


def _emit(payload: Any, path: Optional[str] = None) -> None:
    handle = _open_output(path)
    try:
        json.dump(payload, handle, indent=2)
        handle.write("\n")
    finally:
        if handle is not sys.stdout:
            handle.close()


def _repgen(config: RunConfig) -> int:
    rep = real_irrep(config.dim) if config.real else complex_irrep(config.dim)
    payload = rep.to_dict()
    payload["casimir"] = float(np.real(np.trace(rep.casimir())) / rep.dim)
    _emit(payload, config.output)
    return EXIT_OK


def _bmat(config: RunConfig) -> int:
    triple = realize_B_real(config.n) if config.real else compute_B(config.n, config.theta)
    payload = triple.to_dict()
    report = verify_identities(triple)
    payload["residuals"] = report.to_dict()
    payload["holds"] = report.holds()
    _emit(payload, config.output)
    return EXIT_OK


def _ansatz(config: RunConfig) -> int:
    spec = AnsatzSpec(tuple(_parse_integers(config.summands, "--summands")), _parse_params(config.params))
    _emit(structure_ansatz(spec).to_dict(), config.emit)
    return EXIT_OK


def _family(config: RunConfig) -> int:
    try:
        instance = build_family(Family(config.name), _parse_params(config.params))
    except ConstructionInvalid as error:
        logger.error(str(error))
        if error.report is not None:
            _emit(error.report.to_dict())
        return EXIT_INVALID
    _emit(instance.to_dict(), config.emit)
    return EXIT_OK


def _verify(config: RunConfig) -> int:
    report = validate(_load_data(config.data), Domain(config.domain), config.samples, tol=config.tol)
    _emit(report.to_dict())
    return EXIT_OK if report.valid else EXIT_INVALID


def _format(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.17g}"


def _fields(config: RunConfig) -> int:
    data = _load_data(config.data)
    radii = _parse_ray(config.ray)
    direction = _parse_floats(config.direction, "--direction")
    samples = ray_profile(data, radii, direction, energy=not config.no_energy, h=config.step, tol=config.tol)
    reference = REFERENCE_PROFILES.get(config.reference) if config.reference else None
    if config.emit == "json":
        payload: Dict[str, Any] = {"samples": [sample.to_dict() for sample in samples]}
        if config.boundary:
            limit = higgs_boundary_eigenvalues(data, direction, radii[-3:], tol=config.tol)
            payload["boundary_limit"] = [[value.real, value.imag] for value in limit.limit]
        _emit(payload, config.output)
        return EXIT_OK

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = ["r", "higgs_norm_sq", "energy_density", "eigenvalues"]
    if reference is not None:
        header += ["reference_higgs_norm_sq", "reference_energy_density"]
    writer.writerow(header)
    for r, sample in zip(radii, samples):
        row = [
            _format(float(r)),
            _format(sample.higgs_norm_sq),
            _format(sample.energy_density),
            ";".join(_format(float(value.imag)) for value in sample.higgs_eigenvalues),
        ]
        if reference is not None:
            norm_profile, energy_profile = reference
            row += [
                _format(float(norm_profile(r))),
                _format(float(energy_profile(r))) if energy_profile is not None else "",
            ]
        writer.writerow(row)
    handle = _open_output(config.output)
    try:
        handle.write(buffer.getvalue())
    finally:
        if handle is not sys.stdout:
            handle.close()
    return EXIT_OK


def _spectral(config: RunConfig) -> int:
    data = _load_data(config.data)
    curve = spectral_curve(data)
    payload = curve.to_dict()
    if config.check:
        rng = np.random.default_rng(config.seed)
        points = rng.standard_normal((config.check, 4))
        discrepancies = [
            abs(curve.scale * curve.evaluate(eta_re + 1j * eta_im, zeta_re + 1j * zeta_im)
                - spectral_polynomial(data, eta_re + 1j * eta_im, zeta_re + 1j * zeta_im))
            for eta_re, eta_im, zeta_re, zeta_im in points
        ]
        payload["max_discrepancy"] = float(max(discrepancies))
    _emit(payload, config.output)
    return EXIT_OK


def _rational(config: RunConfig) -> int:
    data = _load_data(config.data)
    mapping = rational_map(data)
    payload = mapping.to_dict()
    if config.eval:
        try:
            points = [complex(item.strip().replace(" ", "")) for item in config.eval.split(",")]
        except ValueError as error:
            raise UsageError(f"--eval expects complex numbers such as 0.5+1j, got {config.eval!r}") from error
        payload["values"] = [[value.real, value.imag] for value in mapping.evaluate(points)]
    _emit(payload, config.output)
    return EXIT_OK


def _decompose(config: RunConfig) -> int:
    payload = _read_json(config.rep if config.rep else config.induced)
    if config.rep:
        rep = ReprTriple.from_dict(payload)
    else:
        if not payload.get("generators"):
            raise UsageError("--induced expects a family file carrying spherical generators")
        structure = induced_structure_rep(
            AdhmData.from_dict(payload["data"]), ReprTriple.from_dict(payload["generators"])
        )
        rep = structure.restricted()
    _emit({"summands": list(decompose(rep).summands)}, config.output)
    return EXIT_OK


def _structure_group(config: RunConfig) -> int:
    bounds = structure_group_bounds(_parse_integers(config.summands, "--summands"), seed=config.seed)
    _emit(bounds.to_dict(), config.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monopole", formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug records to stderr")
    parser.add_argument("--tol", type=float, default=None, help="Structural tolerance override")
    parser.add_argument("--seed", type=int, default=0, help="Seed for randomized checks")
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    repgen = commands.add_parser("repgen", help="Generators of an irreducible representation")
    repgen.add_argument("--dim", type=int, required=True)
    repgen.add_argument("--real", action="store_true")
    repgen.add_argument("--output", default=None)
    repgen.set_defaults(handler=_repgen)

    bmat = commands.add_parser("bmat", help="Intertwiner triple and its identity residuals")
    bmat.add_argument("--n", type=int, required=True)
    bmat.add_argument("--real", action="store_true")
    bmat.add_argument("--theta", type=float, default=0.0)
    bmat.add_argument("--output", default=None)
    bmat.set_defaults(handler=_bmat)

    ansatz = commands.add_parser("ansatz", help="Spherically symmetric M for given summands")
    ansatz.add_argument("--summands", required=True)
    ansatz.add_argument("--params", default=None)
    ansatz.add_argument("--emit", default=None)
    ansatz.set_defaults(handler=_ansatz)

    family = commands.add_parser("family", help="Construct and validate a monopole family member")
    family.add_argument("--name", required=True, choices=[member.value for member in Family])
    family.add_argument("--params", default=None)
    family.add_argument("--emit", default=None)
    family.set_defaults(handler=_family)

    verify = commands.add_parser("verify", help="Validate ADHM data")
    verify.add_argument("--data", required=True)
    verify.add_argument("--domain", default=Domain.BALL.value, choices=[member.value for member in Domain])
    verify.add_argument("--samples", type=int, default=None)
    verify.set_defaults(handler=_verify)

    fields = commands.add_parser("fields", help="Sample the Higgs field along a ray")
    fields.add_argument("--data", required=True)
    fields.add_argument("--ray", default="0:0.99:200")
    fields.add_argument("--direction", default="0,0,1")
    fields.add_argument("--emit", default="csv", choices=["csv", "json"])
    fields.add_argument("--output", default=None)
    fields.add_argument("--step", type=float, default=None)
    fields.add_argument("--no-energy", action="store_true")
    fields.add_argument("--boundary", action="store_true", help="Extrapolate the spectrum to the boundary")
    fields.add_argument("--reference", default=None, choices=sorted(REFERENCE_PROFILES))
    fields.set_defaults(handler=_fields)

    spectral = commands.add_parser("spectral", help="Spectral curve coefficients")
    spectral.add_argument("--data", required=True)
    spectral.add_argument("--check", type=int, default=0, help="Compare with the determinant at random points")
    spectral.add_argument("--output", default=None)
    spectral.set_defaults(handler=_spectral)

    rational = commands.add_parser("rational", help="Rational map of Sp(1) data")
    rational.add_argument("--data", required=True)
    rational.add_argument("--eval", default=None)
    rational.add_argument("--output", default=None)
    rational.set_defaults(handler=_rational)

    decomposition = commands.add_parser("decompose", help="Irreducible summands of a representation")
    source = decomposition.add_mutually_exclusive_group(required=True)
    source.add_argument("--rep", default=None)
    source.add_argument("--induced", default=None)
    decomposition.add_argument("--output", default=None)
    decomposition.set_defaults(handler=_decompose)

    structure = commands.add_parser("structure-group", help="Bounds on the structure group rank")
    structure.add_argument("--summands", required=True)
    structure.add_argument("--output", default=None)
    structure.set_defaults(handler=_structure_group)

    return parser


def run(config: RunConfig) -> int:
    try:
        return int(config.handler(config))
    except UsageError as error:
        print(f"monopole: error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except MonopoleError as error:
        print(f"monopole: {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_INVALID


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        config = build_parser().parse_args(argv)
    except UsageError as error:
        print(f"monopole: error: {error}", file=sys.stderr)
        return EXIT_USAGE
    basicConfig(level=DEBUG if config.verbose else WARNING, stream=sys.stderr, force=True)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
