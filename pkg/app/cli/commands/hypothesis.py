"""
hypothesis: minimal n per theorem variant up to --n-max
"""
from app.cli.render import CommandResult
from app.core.exceptions import ConfigError
from app.models import Command, RunConfig, TheoremVariant, parse_index_name
from app.services.theorems import check_hypothesis, hypothesis_scan


def _variants(raw):
    if raw is None:
        return list(TheoremVariant)
    try:
        return [TheoremVariant.parse(raw)]
    except ValueError:
        raise ConfigError(f"unknown theorem variant {raw!r}; use 1i, 1ii, 2i, 2ii, 3i or 3ii")


def run(config: RunConfig) -> CommandResult:
    spec = parse_index_name(config.index_name)
    rows = []
    text = []
    for theorem in _variants(config.theorem):
        scan = hypothesis_scan(theorem, spec, config.n_max)
        row = {
            "theorem": theorem.value,
            "index": spec.name,
            "n_max": config.n_max,
            "minimal_n": scan.minimal_n,
            "holds_through_n_max": scan.holds_through_n_max,
            "failing_after_minimal": " ".join(map(str, scan.failing_after_minimal)),
            "reason": scan.reason,
        }
        if scan.minimal_n is None:
            line = f"{theorem.value}: not applicable ({scan.reason})"
        else:
            line = f"{theorem.value}: minimal n = {scan.minimal_n}"
            if not scan.holds_through_n_max:
                line += f" (fails again at n = {row['failing_after_minimal']})"
        if config.n is not None:
            report = check_hypothesis(theorem, config.n, spec)
            row["holds_at_n"] = report.holds
            row["violations_at_n"] = len(report.violations)
            line += f"; at n = {config.n}: {'holds' if report.holds else 'fails'}"
        rows.append(row)
        text.append(line)

    payload = {"index": spec.name, "n_max": config.n_max, "theorems": rows}
    return CommandResult(command=Command.HYPOTHESIS, payload=payload, rows=rows, text=text)
