"""Command-line front end.

Every subcommand runs a set of named checks and writes a report with one
entry per check (residual, tolerance, pass flag), summary counts and a
provenance block echoing the configuration.  Exit status is 0 when every
check passes, 1 when any check fails and 2 for configuration or domain
errors.

Options may also be supplied as a JSON object via ``--config``; command
line flags override it.  Reports go to stdout unless ``--output`` is set;
a relative output path is resolved against $FIERZ_MD_OUTPUT_DIR when that
variable is defined.
"""
import argparse
import csv
import io
import json
import math
import os
import sys
from importlib import metadata

import numpy as np

from . import dirac_algebra as da
from .bilinears import (
    bilinears, fierz_residuals, gauge_transform, plane_wave_field, random_plane_wave_modes,
)
from .differentiation import DiffEngine
from .errors import DomainError
from .inversion import (
    PhysicalParams, bilinearized_constraints, invert_A_pseudo, invert_A_scalar,
)
from .maxwell import continuity_residuals
from . import poincare as pc
from . import reductions as rd

COMMANDS = ("verify", "invert", "residual", "lie-check", "reduce", "solve-p1310")
GROUPS = ("spherical", "cylindrical", "p11_2", "p13_10")

REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "checks", "summary", "provenance"],
    "properties": {
        "command": {"enum": list(COMMANDS)},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "residual", "tolerance", "passed"],
                "properties": {
                    "name": {"type": "string"},
                    "residual": {"type": ["number", "null"]},
                    "tolerance": {"type": "number"},
                    "passed": {"type": "boolean"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["total", "passed", "failed", "ok"],
        },
        "provenance": {"type": "object", "required": ["config", "version"]},
        "results": {},
    },
}


class ConfigError(ValueError):
    """Malformed or unsupported configuration."""


# ---------------------------------------------------------------------------
# reports


class Report:
    def __init__(self, command):
        self.command = command
        self.checks = []
        self.results = {}

    def check(self, name, residual, tolerance):
        residual = None if residual is None else float(residual)
        passed = residual is not None and math.isfinite(residual) and residual <= tolerance
        self.checks.append({"name": name, "residual": residual,
                            "tolerance": float(tolerance), "passed": bool(passed)})

    @property
    def ok(self):
        return all(c["passed"] for c in self.checks)

    def as_dict(self, config):
        n_pass = sum(c["passed"] for c in self.checks)
        return {
            "command": self.command,
            "checks": self.checks,
            "summary": {"total": len(self.checks), "passed": n_pass,
                        "failed": len(self.checks) - n_pass, "ok": self.ok},
            "results": self.results,
            "provenance": {"config": config, "version": _version()},
        }


def _version():
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "unknown"


def _to_plain(obj):
    if isinstance(obj, dict):
        return {str(k): _to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _to_plain(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": float(obj.real), "im": float(obj.imag)}
    return obj


def dumps(obj, indent=2, _level=0):
    """JSON with every float written to 17 significant digits (nan/inf -> null)."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return format(obj, ".17g") if math.isfinite(obj) else "null"
    return json.dumps(obj)


def to_csv(report_dict):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "residual", "tolerance", "passed"])
    for c in report_dict["checks"]:
        res = "" if c["residual"] is None else format(c["residual"], ".17g")
        w.writerow([c["name"], res, format(c["tolerance"], ".17g"), c["passed"]])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands


def _params(cfg):
    try:
        return PhysicalParams(q=float(cfg["q"]), mass=float(cfg["m"]))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _engine(cfg):
    return DiffEngine(h=float(cfg["h"]), order=int(cfg["order"]))


def _rep(name):
    reps = {"dirac": da.DIRAC, "chiral": da.CHIRAL}
    if name not in reps:
        raise ConfigError(f"unknown representation {name!r}")
    return reps[name]


def cmd_verify(cfg, report):
    suite = cfg["suite"]
    if suite not in ("dirac", "fierz", "all"):
        raise ConfigError(f"unknown suite {suite!r}")
    rng = np.random.default_rng(cfg["seed"])
    reps = ["dirac", "chiral"] if cfg["rep"] == "both" else [cfg["rep"]]
    for name in reps:
        rep = _rep(name)
        if suite in ("dirac", "all"):
            for r in da.verify_all(rep, rng, n_spinors=cfg["points"]):
                report.check(f"{name}/{r.identity}", r.max_abs_residual, 1e-13)
        if suite in ("fierz", "all"):
            psi = rng.uniform(-1, 1, (cfg["points"], 4)) + 1j * rng.uniform(-1, 1, (cfg["points"], 4))
            for key, v in fierz_residuals(bilinears(psi, rep)).items():
                report.check(f"{name}/fierz/{key}", v, 1e-10)


def _plane_wave(cfg, rng, pw):
    pp = _params(cfg)
    if pp.mass <= 0:
        raise ConfigError("plane-wave fields need m > 0")
    a = np.asarray(pw.get("a", rng.uniform(-1, 1, 4)), dtype=float)
    if a.shape != (4,):
        raise ConfigError("potential 'a' must have four components")
    if "modes" in pw:
        modes = []
        for md in pw["modes"]:
            from .bilinears import on_shell_momentum, on_shell_spinor
            p = on_shell_momentum(md["p"], pp.mass)
            neg = bool(md.get("negative_energy", False))
            seed = np.asarray(md.get("seed", [1, 0, 0, 0]), dtype=complex)
            u = on_shell_spinor(p, pp.mass, seed, negative_energy=neg)
            modes.append((complex(md.get("amp", 1.0)), p, u, -1.0 if neg else 1.0))
    else:
        modes = random_plane_wave_modes(rng, pp.mass, int(pw.get("positive", 1)),
                                        int(pw.get("negative", 1)))
    field = plane_wave_field(modes, a=a, q=pp.q)
    return field, (lambda x: np.broadcast_to(a, np.shape(x)).copy()), pp


def _phase_polynomial(spec):
    """theta(x) = c1.x + x.Q.x / 2 + c3.x^3 and its gradient (lower index)."""
    try:
        c1 = np.asarray(spec.get("linear", np.zeros(4)), dtype=float)
        c2 = np.asarray(spec.get("quadratic", np.zeros((4, 4))), dtype=float)
        c3 = np.asarray(spec.get("cubic", np.zeros(4)), dtype=float)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad polynomial_phase coefficients: {exc}") from None
    if c1.shape != (4,) or c2.shape != (4, 4) or c3.shape != (4,):
        raise ConfigError("polynomial_phase needs linear (4), quadratic (4x4), cubic (4)")
    c2 = 0.5 * (c2 + c2.T)

    def theta(x):
        return x @ c1 + 0.5 * np.einsum("...i,ij,...j->...", x, c2, x) + (x ** 3) @ c3

    def grad(x):
        return c1 + x @ c2 + 3 * (x ** 2) * c3

    return theta, grad


def _spinor_field(cfg, rng):
    """Exact Dirac solution from the field spec, with its potential A^mu(x).

    ``{"plane_wave": {...}}`` is a superposition of on-shell modes in a
    constant potential; ``{"polynomial_phase": {..., "plane_wave": {...}}}``
    multiplies it by exp(i q theta) for a polynomial theta, which moves the
    potential to A^mu - d^mu theta.
    """
    spec = cfg.get("field") or {"plane_wave": {}}
    if not isinstance(spec, dict) or len(spec) != 1 or set(spec) - {"plane_wave", "polynomial_phase"}:
        raise ConfigError("field spec must be {'plane_wave': {...}} or {'polynomial_phase': {...}}")
    if "plane_wave" in spec:
        return _plane_wave(cfg, rng, spec["plane_wave"])
    ph = spec["polynomial_phase"]
    field, a_fn, pp = _plane_wave(cfg, rng, ph.get("plane_wave", {}))
    theta, grad = _phase_polynomial(ph)
    return (gauge_transform(field, theta, grad, pp.q),
            lambda x: a_fn(x) - da.ETA_DIAG * grad(np.asarray(x, dtype=float)), pp)


def cmd_invert(cfg, report):
    rng = np.random.default_rng(cfg["seed"])
    field, a_fn, pp = _spinor_field(cfg, rng)
    x = rng.uniform(-1, 1, (cfg["points"], 4))
    a = a_fn(x)
    a_an = invert_A_scalar(field, pp, x)
    a_fd = invert_A_scalar(field, pp, x, DiffEngine(mode="central", h=cfg["h"], order=cfg["order"]))
    report.check("scalar_form_analytic", np.max(np.abs(a_an - a)), 1e-9)
    report.check("scalar_form_finite_difference", np.max(np.abs(a_fd - a)), 1e-6)
    try:
        a_ps = invert_A_pseudo(field, pp, x)
        report.check("pseudo_form_analytic", np.max(np.abs(a_ps - a)), 1e-9)
    except DomainError:
        report.results["pseudo_form"] = "undefined (omega vanishes)"
    report.results["injected_potential_mean"] = np.mean(a, axis=0)
    report.results["recovered_mean"] = np.mean(a_an.real, axis=0)


def cmd_residual(cfg, report):
    rng = np.random.default_rng(cfg["seed"])
    field, a_fn, pp = _spinor_field(cfg, rng)
    x = rng.uniform(-1, 1, (cfg["points"], 4))
    worst = {}
    for xi in x:
        for k, v in bilinearized_constraints(field, a_fn, pp, xi, _engine(cfg)).items():
            if v is not None:
                worst[k] = max(worst.get(k, 0.0), v)
    for k in sorted(worst):
        report.check(f"constraint/{k}", worst[k], 1e-9)
    vec, ax = continuity_residuals(field, pp, x)
    report.check("continuity/vector", np.max(np.abs(vec)), 1e-9)
    report.check("continuity/axial", np.max(np.abs(ax)), 1e-9)


_LIE_NAMES = {"spherical": "P3_4", "cylindrical": "P12_8", "p11_2": "P11_2",
              "p13_10": "P13_10tilde"}


def cmd_lie_check(cfg, report):
    rng = np.random.default_rng(cfg["seed"])
    groups = GROUPS if cfg["group"] in (None, "all") else [cfg["group"]]
    for g in groups:
        if g not in _LIE_NAMES:
            raise ConfigError(f"unknown group {g!r}")
        lam = 1.0 if cfg["lambda"] is None else cfg["lambda"]
        sub = pc.subgroup(_LIE_NAMES[g], phi=cfg["phi"], lam=lam)
        x = pc.sample_points(sub, cfg["points"], rng)
        report.check(f"{g}/closure", pc.closure_residual(sub.generators), 1e-12)
        report.check(f"{g}/ansatz", pc.ansatz_residual(sub, pc.random_profile(sub, rng), x), 1e-8)


_PROFILE_NAMES = {
    "spherical": ("ja", "jb", "sigma", "w"),
    "cylindrical": ("ja", "jb", "jc", "jd", "ka", "kb", "kc", "kd", "sigma", "w"),
}


def _table_poly(table, name):
    """Polynomial in (t, s) from a table of [i, j, coefficient] rows (t^i s^j)."""
    if isinstance(table, (int, float)):
        return float(table)
    expr = 0
    try:
        for i, j, c in table:
            if int(i) != i or int(j) != j or i < 0 or j < 0:
                raise ConfigError(f"profile {name!r}: exponents must be non-negative integers")
            expr += float(c) * rd.T ** int(i) * rd.S ** int(j)
    except (TypeError, ValueError):
        raise ConfigError(f"profile {name!r} must be a number or a list of [i, j, coef] rows") from None
    return expr


def _profile_from_spec(cfg, group):
    """Reduced profile from ``--field {"<group>": {name: table, ...}}``, or None."""
    spec = cfg.get("field")
    if spec is None:
        return None
    if not isinstance(spec, dict) or set(spec) != {group}:
        raise ConfigError(f"reduce --group {group} expects a field spec {{'{group}': {{...}}}}")
    names = _PROFILE_NAMES[group]
    tables = spec[group]
    if not isinstance(tables, dict) or set(tables) != set(names):
        raise ConfigError(f"{group} profile needs exactly the components {names}")
    polys = [_table_poly(tables[k], k) for k in names]
    if group == "spherical":
        return rd.SphericalProfile(*polys, branch=cfg["branch"])
    return rd.CylindricalProfile(*polys)


def _reduce_spherical(cfg, report, rng, pp):
    n = cfg["points"]
    given = _profile_from_spec(cfg, "spherical")
    for branch in ((given.branch,) if given else (1, -1)):
        p = given or rd.random_spherical_profile(rng, branch)
        t = rng.uniform(-0.5, 0.5, n)
        r = rng.uniform(0.6, 1.4, n)
        report.check(f"branch{branch:+d}/fierz", np.max(np.abs(p.fierz_residual(t, r))), 1e-8)
        _, fb = rd.spherical_F(p, pp, t, r)
        report.check(f"branch{branch:+d}/monopole", np.max(np.abs(fb * 2 * pp.q * r ** 3 - branch)), 1e-8)
        report.check(f"branch{branch:+d}/flux",
                     abs(rd.monopole_flux(p, pp, 0.1, 1.0) + branch * 2 * np.pi / pp.q), 1e-6)
        verb = rd.spherical_md_residuals(p, pp, t, r, "verbatim")
        amb = rd.spherical_md_residuals(p, pp, t, r, "ambient", h=cfg["h"])
        report.check(f"branch{branch:+d}/maxwell_verbatim_vs_ambient",
                     max(np.max(np.abs(verb[0] - amb[0])), np.max(np.abs(verb[1] - amb[1]))), 1e-4)


def _reduce_cylindrical(cfg, report, rng, pp):
    n = cfg["points"]
    p = _profile_from_spec(cfg, "cylindrical") or rd.random_cylindrical_profile(rng)
    t = rng.uniform(-0.5, 0.5, n)
    rho = rng.uniform(0.6, 1.4, n)
    phi = rng.uniform(0, 2 * np.pi, n)
    x = np.stack([t, rho * np.cos(phi), rho * np.sin(phi), rng.uniform(-1, 1, n)], axis=-1)
    lifted = p.lift()
    from .inversion import gauge_invariant_B
    from .maxwell import field_strength
    b4 = gauge_invariant_B(lifted, pp, x).real
    ba, bb, bc, bd = rd.cylindrical_B(p, pp, t, rho)
    X, Y = x[:, 1], x[:, 2]
    b_red = np.stack([ba, X * bb - Y * bc, Y * bb + X * bc, bd], axis=-1)
    report.check("B_vs_ambient", np.max(np.abs(b_red - b4)), 1e-6)
    f4 = field_strength(lifted, pp, x, _engine(cfg))
    report.check("F_vs_ambient", np.max(np.abs(rd.cylindrical_field_tensor(p, pp, x) - f4)), 1e-5)
    red = rd.cylindrical_md_residuals(p, pp, t, rho, "reduced", h=cfg["h"])
    amb = rd.cylindrical_md_residuals(p, pp, t, rho, "ambient", h=cfg["h"])
    report.check("maxwell_reduced_vs_ambient",
                 max(np.max(np.abs(a - b)) for a, b in zip(red[:4], amb[:4])), 1e-4)
    report.check("fierz", max(np.max(np.abs(red.fierz_inner)),
                              np.max(np.abs(red.fierz_orthogonality))), 1e-10)


def cmd_reduce(cfg, report):
    group = cfg["group"]
    if group not in GROUPS:
        raise ConfigError(f"reduce needs --group in {GROUPS}")
    rng = np.random.default_rng(cfg["seed"])
    pp = _params(cfg)
    if group == "spherical":
        _reduce_spherical(cfg, report, rng, pp)
    elif group == "cylindrical":
        _reduce_cylindrical(cfg, report, rng, pp)
    elif group == "p11_2":
        rep = rd.p112_solve(pp)
        for name, _, res in rep.steps:
            report.check(f"step/{name}", res, 0.0)
        report.results["solution"] = rep.solution
        report.results["trivial"] = rep.is_trivial
    else:
        lam = 1.0 if cfg["lambda"] is None else cfg["lambda"]
        res = rd.p1310_solve(lam, pp, cfg["ja"], cfg["jb"], cfg["ka"], cfg["branch"])
        _p1310_report(res, cfg, report)


def _p1310_report(res, cfg, report):
    report.results["feasible"] = res.feasible
    report.results["kd_squared"] = res.kd_squared
    report.results["warnings"] = res.warnings
    sols = []
    for i, s in enumerate(res.solutions):
        ver = rd.p1310_verify(s, n_points=cfg["points"], rng=np.random.default_rng(cfg["seed"]))
        report.check(f"solution{i}/f", abs(rd.p1310_f(s)), 1e-12)
        report.check(f"solution{i}/maxwell", ver["maxwell"], 1e-6)
        report.check(f"solution{i}/continuity", max(ver["continuity"], ver["axial_continuity"]), 1e-8)
        sols.append({**s.as_dict(), "residuals": ver})
    report.results["solutions"] = sols


def cmd_solve_p1310(cfg, report):
    pp = _params(cfg)
    lam = 1.0 if cfg["lambda"] is None else cfg["lambda"]
    res = rd.p1310_solve(lam, pp, cfg["ja"], cfg["jb"], cfg["ka"], cfg["branch"])
    _p1310_report(res, cfg, report)


_HANDLERS = {"verify": cmd_verify, "invert": cmd_invert, "residual": cmd_residual,
             "lie-check": cmd_lie_check, "reduce": cmd_reduce, "solve-p1310": cmd_solve_p1310}

DEFAULTS = {
    "suite": "all", "rep": "dirac", "field": None, "q": 1.0, "m": 0.0, "lambda": None,
    "phi": 0.7, "branch": 1, "h": 1e-3, "order": 4, "points": 20, "seed": 0,
    "group": None, "ja": 1.0, "jb": 1.0, "ka": 0.0, "output": None, "format": "json",
}
_DEFAULT_MASS = {"invert": 1.0, "residual": 1.0}


# ---------------------------------------------------------------------------
# argument handling


def build_parser():
    parser = argparse.ArgumentParser(prog="fierz-md", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="JSON file with options")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", dest="sub_config", help="JSON file with options")
        p.add_argument("--q", type=float)
        p.add_argument("--m", type=float)
        p.add_argument("--h", type=float)
        p.add_argument("--order", type=int, choices=(2, 4))
        p.add_argument("--points", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--output")
        p.add_argument("--format", choices=("json", "csv"))

    p = sub.add_parser("verify", help="Dirac-algebra and Fierz identity suites")
    common(p)
    p.add_argument("--suite", choices=("dirac", "fierz", "all"))
    p.add_argument("--rep", choices=("dirac", "chiral", "both"))
    for name, text in (("invert", "recover a constant potential from a plane-wave field"),
                       ("residual", "bilinearized constraints and continuity of a plane-wave field")):
        p = sub.add_parser(name, help=text)
        common(p)
        p.add_argument("--field", type=json.loads, help="field spec as JSON")
    p = sub.add_parser("lie-check", help="generator closure and invariant-ansatz Lie derivatives")
    common(p)
    p.add_argument("--group", choices=GROUPS + ("all",))
    p.add_argument("--phi", type=float)
    p.add_argument("--lambda", dest="lambda_", type=float)
    p = sub.add_parser("reduce", help="symmetry-reduced checks for one subgroup")
    common(p)
    p.add_argument("--group", choices=GROUPS)
    p.add_argument("--field", type=json.loads,
                   help="profile as JSON: {group: {name: [[i, j, coef], ...], ...}}")
    p.add_argument("--lambda", dest="lambda_", type=float)
    p.add_argument("--ja", type=float)
    p.add_argument("--jb", type=float)
    p.add_argument("--ka", type=float)
    p.add_argument("--branch", type=int, choices=(1, -1))
    p = sub.add_parser("solve-p1310", help="solve and verify a non-splitting-group member")
    common(p)
    p.add_argument("--lambda", dest="lambda_", type=float)
    p.add_argument("--ja", type=float)
    p.add_argument("--jb", type=float)
    p.add_argument("--ka", type=float)
    p.add_argument("--branch", type=int, choices=(1, -1))
    return parser


def _load_config(path):
    if path is None:
        return {}
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(data) - set(DEFAULTS) - {"command"}
    if unknown:
        raise ConfigError(f"unknown config keys {sorted(unknown)}")
    return data


def resolve_config(args):
    cfg = dict(DEFAULTS)
    cfg["m"] = _DEFAULT_MASS.get(args.command, DEFAULTS["m"])
    file_cfg = _load_config(getattr(args, "sub_config", None) or args.config)
    if "command" in file_cfg and file_cfg["command"] != args.command:
        raise ConfigError("config command does not match the subcommand")
    cfg.update({k: v for k, v in file_cfg.items() if k != "command"})
    for key, value in vars(args).items():
        if key in ("command", "config", "sub_config") or value is None:
            continue
        cfg["lambda" if key == "lambda_" else key] = value
    if cfg["points"] <= 0:
        raise ConfigError("points must be positive")
    return cfg


def _output_path(path):
    base = os.environ.get("FIERZ_MD_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def run(argv=None, stdout=None):
    """Parse ``argv``, run the command, write the report; return the exit code."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        cfg = resolve_config(args)
        report = Report(args.command)
        _HANDLERS[args.command](cfg, report)
    except (ConfigError, DomainError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    echo = {"command": args.command, **{k: cfg[k] for k in sorted(cfg) if k != "output"}}
    data = _to_plain(report.as_dict(_to_plain(echo)))
    text = dumps(data) + "\n" if cfg["format"] == "json" else to_csv(data)
    if cfg["output"]:
        with open(_output_path(cfg["output"]), "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0 if report.ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
