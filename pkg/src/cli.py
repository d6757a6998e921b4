"""
Command-line interface
Ranking, comparison, lattice operations, cuts, extension and verification
"""

import argparse
import csv
import dataclasses
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .chain_completion import Bound, chain_stats_from_dict, infimum, join, meet, supremum
from .errors import DuplicateLabel, IVIFNError, Malformed
from .ivifn_core import FIELDS, IVIFN, approx, format_rational, ivifn_from_dict, make_ivifn
from .ivifs import cut, ivifs_from_dict, zadeh_extend
from .oracle import run_all
from .order_engine import OrderSelector, compare, principle, rank
from .settings import VerificationSettings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATIONS = 2

Alternatives = List[Tuple[str, IVIFN]]


def setup_logging(verbosity: int = 0, log_file: Optional[Path] = None):
    """Configure logging; command output goes to stdout, logs to stderr"""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG

    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)
    return logging.getLogger(__name__)


def load_json(text: str, source: str = "input") -> Any:
    """Parse JSON keeping every number exact"""
    try:
        return json.loads(text, parse_float=str)
    except json.JSONDecodeError as e:
        raise Malformed(source, f"{source}: invalid JSON ({e})") from e


def _unique(items: Alternatives) -> Alternatives:
    seen = set()
    for label, _ in items:
        if label in seen:
            raise DuplicateLabel(label)
        seen.add(label)
    return items


def read_alternatives(path: Path) -> Alternatives:
    """Read labelled IVIFNs from a CSV file with a header row or a JSON list"""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json" or text.lstrip().startswith("["):
        return _alternatives_from_json(load_json(text, str(path)), path)
    return _alternatives_from_csv(text, path)


def _alternatives_from_json(data: Any, path: Path) -> Alternatives:
    if not isinstance(data, list):
        raise Malformed(str(path), f"{path}: expected a JSON list of alternatives")

    items = []
    for index, row in enumerate(data, start=1):
        if not isinstance(row, dict):
            raise Malformed(row, f"{path}: entry {index} is not an object")
        label = str(row.get("label", f"a{index}"))
        items.append((label, ivifn_from_dict(row)))
    return _unique(items)


def _alternatives_from_csv(text: str, path: Path) -> Alternatives:
    reader = csv.DictReader(text.splitlines())
    header = [name.strip() for name in reader.fieldnames or []]
    missing = [name for name in ("label",) + FIELDS if name not in header]
    if missing:
        raise Malformed(str(path), f"{path}: CSV header lacks {', '.join(missing)}")

    items = []
    for row in reader:
        row = {(k or "").strip(): (v or "").strip() for k, v in row.items()}
        if not any(row.values()):
            continue
        items.append((row["label"], make_ivifn(*(row[name] for name in FIELDS))))
    return _unique(items)


def read_ivifn(source: str) -> IVIFN:
    """An IVIFN from a JSON file, or inline as 'mu_lo,mu_hi,nu_lo,nu_hi'"""
    path = Path(source)
    if path.is_file():
        data = load_json(path.read_text(), source)
        if not isinstance(data, dict):
            raise Malformed(source, f"{source}: expected a JSON object with {', '.join(FIELDS)}")
        return ivifn_from_dict(data)

    parts = [part.strip() for part in source.split(",")]
    if len(parts) != 4:
        raise Malformed(source, f"not a file or 'mu_lo,mu_hi,nu_lo,nu_hi': {source!r}")
    return make_ivifn(*parts)


def read_json_file(path: Path) -> Any:
    return load_json(Path(path).read_text(), str(path))


def exact(value) -> str:
    return format_rational(value)


def approx_ivifn(a: IVIFN) -> str:
    mu = f"[{approx(a.mu_lo)},{approx(a.mu_hi)}]"
    nu = f"[{approx(a.nu_lo)},{approx(a.nu_hi)}]"
    return f"<{mu},{nu}>"


def format_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]

    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


class IVIFNApp:
    """Runs one parsed command and writes its output"""

    def __init__(self, args: argparse.Namespace, out=None):
        self.logger = logging.getLogger(__name__)
        self.args = args
        self.out = out or sys.stdout

    @property
    def order(self) -> OrderSelector:
        return self.args.order or OrderSelector.HZX

    def emit(self, text: str):
        print(text, file=self.out)

    def emit_json(self, data: Any):
        self.emit(json.dumps(data, indent=2))

    def emit_ivifn(self, a: IVIFN, label: Optional[str] = None, extra: Optional[Dict] = None):
        if self.args.json:
            data = {"label": label} if label is not None else {}
            data.update(a.to_dict())
            data.update(extra or {})
            self.emit_json(data)
        else:
            prefix = f"{label}: " if label is not None else ""
            self.emit(f"{prefix}{a}  ~ {approx_ivifn(a)}")

    def cmd_rank(self) -> int:
        items = read_alternatives(self.args.file)
        ranked = rank(items, self.order)
        labels = principle(self.order).KEY_LABELS

        if self.args.json:
            rows = []
            for item in ranked:
                row: Dict[str, Any] = {"label": item.label}
                row.update(item.value.to_dict())
                row["position"] = item.position
                row["stats"] = item.stats.to_dict()
                row["decided_at"] = (
                    item.versus_next.key_label(self.order) if item.versus_next else None
                )
                rows.append(row)
            self.emit_json(rows)
            return EXIT_OK

        keyed = principle(self.order)
        headers = ["#", "label", "ivifn"]
        for name in labels:
            headers += [name, f"~{name}"]
        headers.append("tie-break")

        rows = []
        for item in ranked:
            row = [str(item.position), item.label, str(item.value)]
            for key in keyed.keys(item.value):
                row += [exact(key), approx(key)]
            row.append(item.versus_next.key_label(self.order) if item.versus_next else "")
            rows.append(row)
        self.emit(format_table(headers, rows))
        return EXIT_OK

    def cmd_compare(self) -> int:
        a = read_ivifn(self.args.first)
        b = read_ivifn(self.args.second)
        outcome = compare(a, b, self.order)
        key = outcome.key_label(self.order)

        if self.args.json:
            self.emit_json(
                {
                    "order": self.order.value.lower(),
                    "a": a.to_dict(),
                    "b": b.to_dict(),
                    "relation": outcome.relation.name,
                    "decided_at": key,
                }
            )
        elif key == "=":
            self.emit("Equal")
        else:
            self.emit(f"{outcome.relation.name.capitalize()} (decided at {key})")
        return EXIT_OK

    def cmd_join(self) -> int:
        items = read_alternatives(self.args.file)
        result = join([value for _, value in items], self.order)
        self.emit_ivifn(result, self._label_of(items, result))
        return EXIT_OK

    def cmd_meet(self) -> int:
        items = read_alternatives(self.args.file)
        result = meet([value for _, value in items], self.order)
        self.emit_ivifn(result, self._label_of(items, result))
        return EXIT_OK

    @staticmethod
    def _label_of(items: Alternatives, value: IVIFN) -> Optional[str]:
        for label, candidate in items:
            if candidate == value:
                return label
        return None

    def cmd_sup_stats(self) -> int:
        document = read_json_file(self.args.file)
        cs = chain_stats_from_dict(document, self.args.order)
        if self.args.lower:
            cs = dataclasses.replace(cs, bound=Bound.LOWER)

        result = infimum(cs) if cs.bound is Bound.LOWER else supremum(cs)
        self.emit_ivifn(result, extra={"order": cs.order.value.lower(), "bound": cs.bound.value})
        return EXIT_OK

    def cmd_cut(self) -> int:
        a_set = ivifs_from_dict(read_json_file(self.args.ivifs))
        alpha = read_ivifn(self.args.alpha)
        members = cut(a_set, alpha, self.order)

        if self.args.json:
            self.emit_json({"alpha": alpha.to_dict(), "cut": list(members)})
        else:
            self.emit(" ".join(members))
        return EXIT_OK

    def cmd_extend(self) -> int:
        a_set = ivifs_from_dict(read_json_file(self.args.ivifs))
        document = read_json_file(self.args.mapping)
        if not isinstance(document, dict):
            raise Malformed(self.args.mapping, "a mapping file must be a JSON object")

        mapping = document.get("map", document)
        if not isinstance(mapping, dict):
            raise Malformed(mapping, "'map' must be an object of label -> label")
        mapping = {str(x): str(y) for x, y in mapping.items()}
        universe_y = document.get("universe") or list(dict.fromkeys(mapping.values()))

        image = zadeh_extend(mapping, a_set, [str(y) for y in universe_y], self.order)
        if self.args.json:
            self.emit_json(image.to_dict())
        else:
            for y in image.universe:
                self.emit(f"{y}: {image(y)}  ~ {approx_ivifn(image(y))}")
        return EXIT_OK

    def cmd_verify(self) -> int:
        settings = VerificationSettings()
        if self.args.config:
            settings = VerificationSettings.from_file(self.args.config)
        if self.args.seed is not None:
            settings.seed = self.args.seed
        if self.args.trials is not None:
            settings.random_pairs = self.args.trials
            settings.random_subsets = self.args.trials

        reports = run_all(settings, self.order, self.args.grid)
        if self.args.json:
            self.emit_json([report.to_dict() for report in reports])
        else:
            rows = []
            for report in reports:
                status = "ok" if report.passed else "FAIL"
                found = sum(report.counts.values())
                rows.append([report.suite, str(report.checked), str(found), status])
            self.emit(f"order {self.order.value.lower()}, seed {settings.seed}")
            self.emit(format_table(["suite", "checked", "violations", "status"], rows))
            for report in reports:
                for violation in report.violations:
                    tag = "" if violation.asserted else " (informational)"
                    witness = " ; ".join(str(a) for a in violation.witness)
                    self.emit(f"  {report.suite}/{violation.axiom}{tag}: {witness}")

        if all(report.passed for report in reports):
            return EXIT_OK
        self.logger.error(f"Verification of {self.order.value} found violations")
        return EXIT_VIOLATIONS

    def run(self) -> int:
        handler = getattr(self, f"cmd_{self.args.command.replace('-', '_')}")
        return handler()


def _order(text: str) -> OrderSelector:
    try:
        return OrderSelector.parse(text)
    except IVIFNError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--order", type=_order, default=None, help="hzx (default), wlw or a plugin order name"
    )
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("--log-file", type=Path, default=None)
    common.add_argument("--config", type=Path, default=None, help="verification settings JSON")

    parser = argparse.ArgumentParser(
        prog="ivifn", description="Complete total orders and lattice operations on IVIFNs"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("rank", parents=[common], help="rank alternatives, best first")
    sub.add_argument("file", type=Path)

    sub = commands.add_parser("compare", parents=[common], help="compare two IVIFNs")
    sub.add_argument("first")
    sub.add_argument("second")

    sub = commands.add_parser("join", parents=[common], help="largest alternative")
    sub.add_argument("file", type=Path)

    sub = commands.add_parser("meet", parents=[common], help="smallest alternative")
    sub.add_argument("file", type=Path)

    sub = commands.add_parser(
        "sup-stats", parents=[common], help="supremum (or infimum) of described family"
    )
    sub.add_argument("file", type=Path)
    sub.add_argument("--lower", action="store_true", help="compute the infimum")

    sub = commands.add_parser("cut", parents=[common], help="labels with degree >= alpha")
    sub.add_argument("ivifs", type=Path)
    sub.add_argument("alpha")

    sub = commands.add_parser("extend", parents=[common], help="image of an IVIFS under a map")
    sub.add_argument("ivifs", type=Path)
    sub.add_argument("mapping", type=Path)

    sub = commands.add_parser("verify", parents=[common], help="run the brute-force oracle")
    sub.add_argument("--grid", type=_positive, default=None)
    sub.add_argument("--seed", type=_non_negative, default=None)
    sub.add_argument("--trials", type=_positive, default=None)

    return parser


def dispatch(args: argparse.Namespace, out=None) -> int:
    """Run parsed arguments, mapping library errors to exit code 1"""
    app = IVIFNApp(args, out)
    try:
        return app.run()
    except (IVIFNError, OSError) as e:
        app.logger.error(f"{args.command} failed: {e}")
        print(f"ivifn {args.command}: {e}", file=sys.stderr)
        return EXIT_INPUT


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Parse and run a command line; returns the exit status"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT
    return dispatch(args, out)
