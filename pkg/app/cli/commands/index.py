"""
index: I(D) of an edge-list digraph plus its condition classification
"""
import structlog

from app.cli.render import CommandResult, format_value
from app.core.config import ACCUMULATION_TOLERANCE
from app.core.exceptions import VerificationError
from app.models import Command, RunConfig, parse_index_name
from app.services.edge_list import read_edge_list
from app.services.indices import index_arc_sum, index_exact, index_spectrum_sum
from app.services.spectrum import classify_spectrum, degree_spectrum

logger = structlog.get_logger()


def run(config: RunConfig) -> CommandResult:
    spec = parse_index_name(config.index_name)
    digraph = read_edge_list(config.input_path, config.n_override)
    value = index_arc_sum(digraph, spec)
    spectrum = degree_spectrum(digraph)
    spectral = index_spectrum_sum(spectrum, spec)
    if abs(value - spectral) > ACCUMULATION_TOLERANCE:
        raise VerificationError(
            f"arc sum {value} and spectrum sum {spectral} disagree",
            details={"index": spec.name, "mask": f"{digraph.mask:#x}"}
        )
    conditions = sorted(c.value for c in classify_spectrum(spectrum))
    exact = str(index_exact(digraph, spec)) if config.exact else None

    logger.info("Index computed", index=spec.name, n=digraph.n, arcs=digraph.arc_count)
    payload = {
        "index": spec.name,
        "n": digraph.n,
        "arc_count": digraph.arc_count,
        "mask": f"{digraph.mask:#x}",
        "value": value,
        "exact": exact,
        "conditions": conditions,
    }
    text = [f"{spec.name}(D) = {format_value(value)}"]
    if exact is not None:
        text.append(f"exact = {exact}")
    text.append(f"conditions: {', '.join(conditions) if conditions else 'none'}")
    return CommandResult(
        command=Command.INDEX,
        payload=payload,
        rows=[{**payload, "conditions": " ".join(conditions)}],
        text=text,
    )
