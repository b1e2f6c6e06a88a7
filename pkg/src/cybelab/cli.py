"""Command-line entry point.

    cybelab <suite> [--window N] [--pencil a1,a2,a3] [--seed S]
            [--format text|machine] [--out FILE] [--expr "..."]

Configuration precedence: command-line flags over the key=value file named
by CYBELAB_CONFIG over built-in defaults.  Exit codes: 0 when every check
passes, 1 when any check fails, 2 for configuration or expression errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from cybelab.atoms import AtomEscape
from cybelab.dsl import DslSyntaxError
from cybelab.report import EXIT_CONFIG
from cybelab.suites import SUITES, Config, ConfigError, run_suite


def _parse_pencil(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise ConfigError(f"pencil needs three comma-separated rationals: {text!r}")
    try:
        return tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad pencil coefficient in {text!r}: {exc}")


def _load_config_file(path: str) -> dict:
    values = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(
                        f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
                key, value = line.split("=", 1)
                values[key.strip()] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}")
    return values


_KEYS = ("window", "pencil", "seed", "format", "out", "expr", "zpoints")


def build_config(args) -> Config:
    cfg: dict = {}
    path = os.environ.get("CYBELAB_CONFIG")
    if path:
        file_values = _load_config_file(path)
        unknown = set(file_values) - set(_KEYS)
        if unknown:
            raise ConfigError(f"unknown config keys {sorted(unknown)} in {path}")
        cfg.update(file_values)
    for key in _KEYS:
        flag = getattr(args, key.replace("-", "_"), None)
        if flag is not None:
            cfg[key] = flag
    out = Config()
    try:
        if "window" in cfg:
            out = _replace(out, window=int(cfg["window"]))
        if "pencil" in cfg:
            pencil = cfg["pencil"]
            out = _replace(out, pencil=_parse_pencil(pencil)
                           if isinstance(pencil, str) else pencil)
        if "seed" in cfg:
            out = _replace(out, seed=int(cfg["seed"]))
        if "format" in cfg:
            if cfg["format"] not in ("text", "machine"):
                raise ConfigError(f"format must be text or machine, got {cfg['format']!r}")
            out = _replace(out, fmt=cfg["format"])
        if "out" in cfg:
            out = _replace(out, out=cfg["out"])
        if "expr" in cfg:
            out = _replace(out, expr=cfg["expr"])
        if "zpoints" in cfg:
            z = cfg["zpoints"]
            if isinstance(z, str):
                parts = [Fraction(p) for p in z.split(",")]
                if len(parts) != 2:
                    raise ConfigError("zpoints needs two rationals")
                z = tuple(parts)
            out = _replace(out, zpoints=z)
    except ValueError as exc:
        raise ConfigError(str(exc))
    if out.window < 1 or out.window > 16:
        raise ConfigError(f"window must be in [1, 16], got {out.window}")
    return out


def _replace(cfg: Config, **kw) -> Config:
    from dataclasses import replace
    return replace(cfg, **kw)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cybelab",
        description="Exact verification suites for the loop-algebra "
                    "Yang-Baxter workbench.")
    parser.add_argument("suite", choices=SUITES, help="suite to run")
    parser.add_argument("--window", type=int, help="degree window per axis")
    parser.add_argument("--pencil", help="a1,a2,a3 (exact rationals)")
    parser.add_argument("--seed", type=int, help="seed for randomized checks")
    parser.add_argument("--format", choices=("text", "machine"),
                        dest="format", help="report format")
    parser.add_argument("--out", help="write the report to a file")
    parser.add_argument("--expr", help="tensor expression for custom checks")
    args = parser.parse_args(argv)

    try:
        config = build_config(args)
        report = run_suite(args.suite, config)
    except (ConfigError, DslSyntaxError, AtomEscape) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    text = (report.serialize() if config.fmt == "machine" else report.human())
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
