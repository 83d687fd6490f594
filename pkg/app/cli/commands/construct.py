"""
construct: literal arc set of a named extremal family

Text output is the canonical edge list, so it can be fed back to `index`.
"""
from app.cli.render import CommandResult
from app.models import Command, RunConfig, parse_index_name
from app.services.edge_list import emit_edge_list
from app.services.families import construct, family_index, make_family
from app.services.indices import index_arc_sum


def run(config: RunConfig) -> CommandResult:
    family = make_family(config.family, config.n)
    digraph = construct(family)
    payload = {
        "family": family.kind.value,
        "n": digraph.n,
        "arcs": [list(arc) for arc in digraph.arcs],
        "mask": f"{digraph.mask:#x}",
    }
    if config.index_name is not None:
        spec = parse_index_name(config.index_name)
        payload["index"] = spec.name
        payload["value"] = index_arc_sum(digraph, spec)
        payload["closed_form"] = family_index(family, spec)

    rows = [{"u": u, "v": v} for u, v in digraph.arcs]
    return CommandResult(
        command=Command.CONSTRUCT,
        payload=payload,
        rows=rows,
        text=emit_edge_list(digraph).splitlines(),
    )
