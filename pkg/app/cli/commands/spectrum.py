"""
spectrum: degree spectrum of an edge-list digraph and its identity check
"""
from app.cli.render import CommandResult
from app.models import Command, RunConfig
from app.services.edge_list import read_edge_list
from app.services.spectrum import classify_spectrum, degree_spectrum, spectrum_identity_violations


def run(config: RunConfig) -> CommandResult:
    digraph = read_edge_list(config.input_path, config.n_override)
    spectrum = degree_spectrum(digraph)
    violations = spectrum_identity_violations(spectrum)
    conditions = sorted(c.value for c in classify_spectrum(spectrum))

    payload = spectrum.to_records()
    payload.update({"n0": spectrum.n0, "conditions": conditions, "identity_violations": violations})

    rows = [{"kind": "a", "i": i, "j": j, "count": c} for (i, j), c in sorted(spectrum.a.items())]
    rows += [{"kind": "p", "i": i, "j": j, "count": c} for (i, j), c in sorted(spectrum.p.items())]
    rows += [{"kind": "n_class", "i": i, "j": None, "count": c} for i, c in sorted(spectrum.n_class.items())]

    text = [f"n = {spectrum.n}, arcs = {spectrum.arc_count}, n0 = {spectrum.n0}"]
    text += [f"a({i},{j}) = {c}" for (i, j), c in sorted(spectrum.a.items())]
    text += [f"p({i},{j}) = {c}" for (i, j), c in sorted(spectrum.p.items())]
    text += [f"n_{i} = {c}" for i, c in sorted(spectrum.n_class.items())]
    text.append(f"conditions: {', '.join(conditions) if conditions else 'none'}")
    text.append("identities: " + ("ok" if not violations else "; ".join(violations)))
    return CommandResult(
        command=Command.SPECTRUM,
        payload=payload,
        rows=rows,
        text=text,
        consistent=not violations,
    )
