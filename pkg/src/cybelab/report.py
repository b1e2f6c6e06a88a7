"""Machine-readable verification reports.

Line-delimited schema, version 1 (documented in docs/report-schema.md): a
header line, one `key=value ...` record per line, a summary line, and an
optional timing line.  Serialization is deterministic (records sorted by
check id) and byte-identical across runs up to the timing line, which the
round-trip and golden tests exclude.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

FORMAT_VERSION = 1
HEADER = f"cybelab-report {FORMAT_VERSION}"

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2

_BARE = re.compile(r"^[A-Za-z0-9_.+/^*,:()\[\]{}-]+$")


def _quote(value: str) -> str:
    if value and _BARE.match(value):
        return value
    escaped = value.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _split_record(line: str) -> dict:
    out = {}
    i = 0
    n = len(line)
    while i < n:
        while i < n and line[i] == " ":
            i += 1
        if i >= n:
            break
        eq = line.index("=", i)
        key = line[i:eq]
        i = eq + 1
        if i < n and line[i] == '"':
            i += 1
            buf = []
            while i < n:
                ch = line[i]
                if ch == "\\":
                    buf.append(line[i + 1])
                    i += 2
                elif ch == '"':
                    i += 1
                    break
                else:
                    buf.append(ch)
                    i += 1
            out[key] = "".join(buf)
        else:
            j = line.find(" ", i)
            if j == -1:
                j = n
            out[key] = line[i:j]
            i = j
    return out


@dataclass
class Check:
    """One verification record; failures always carry a concrete witness."""

    check: str
    status: str
    fields: dict = field(default_factory=dict)

    def to_line(self) -> str:
        bits = [f"check={_quote(self.check)}", f"status={self.status}"]
        for k in sorted(self.fields):
            bits.append(f"{k}={_quote(str(self.fields[k]))}")
        return " ".join(bits)


@dataclass
class Report:
    suite: str
    profile: str = ""
    seed: int = 0
    window: int = 8
    checks: list = field(default_factory=list)
    elapsed_ms: int | None = None
    version: str = "cybelab-0.1.0"

    def add(self, check_id: str, ok: bool, **fields):
        self.checks.append(Check(check_id, PASS if ok else FAIL, fields))

    def add_skip(self, check_id: str, reason: str):
        self.checks.append(Check(check_id, SKIP, {"reason": reason}))

    @property
    def counts(self):
        c = {PASS: 0, FAIL: 0, SKIP: 0}
        for ch in self.checks:
            c[ch.status] += 1
        return c

    @property
    def all_pass(self) -> bool:
        return self.counts[FAIL] == 0

    def exit_code(self) -> int:
        return EXIT_OK if self.all_pass else EXIT_FAIL

    # -- machine format -----------------------------------------------------

    def serialize(self, include_timing: bool = True) -> str:
        lines = [HEADER,
                 f"suite={_quote(self.suite)}",
                 f"version={_quote(self.version)}",
                 f"profile={_quote(self.profile)}",
                 f"seed={self.seed}",
                 f"window={self.window}"]
        for ch in sorted(self.checks, key=lambda c: c.check):
            lines.append(ch.to_line())
        c = self.counts
        lines.append(f"summary total={len(self.checks)} passed={c[PASS]} "
                     f"failed={c[FAIL]} skipped={c[SKIP]}")
        if include_timing and self.elapsed_ms is not None:
            lines.append(f"elapsed_ms={self.elapsed_ms}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Report":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != HEADER:
            raise ValueError("not a cybelab report")
        rep = cls(suite="")
        for line in lines[1:]:
            if line.startswith("summary "):
                continue
            if line.startswith("elapsed_ms="):
                rep.elapsed_ms = int(line.split("=", 1)[1])
                continue
            kv = _split_record(line)
            if "check" in kv:
                status = kv.pop("status")
                cid = kv.pop("check")
                rep.checks.append(Check(cid, status, kv))
            elif "suite" in kv:
                rep.suite = kv["suite"]
            elif "version" in kv:
                rep.version = kv["version"]
            elif "profile" in kv:
                rep.profile = kv["profile"]
            elif "seed" in kv:
                rep.seed = int(kv["seed"])
            elif "window" in kv:
                rep.window = int(kv["window"])
        return rep

    # -- human format --------------------------------------------------------

    def human(self) -> str:
        lines = [f"suite {self.suite} (profile {self.profile or '-'}; "
                 f"seed {self.seed}; window {self.window})"]
        for ch in sorted(self.checks, key=lambda c: c.check):
            mark = {PASS: "ok  ", FAIL: "FAIL", SKIP: "skip"}[ch.status]
            extra = ""
            if ch.fields:
                extra = "  " + " ".join(f"{k}={v}" for k, v in
                                        sorted(ch.fields.items()))
            lines.append(f"  [{mark}] {ch.check}{extra}")
        c = self.counts
        lines.append(f"  {len(self.checks)} checks: {c[PASS]} passed, "
                     f"{c[FAIL]} failed, {c[SKIP]} skipped")
        return "\n".join(lines) + "\n"
