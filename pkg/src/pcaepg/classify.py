"""Verdicts with certificates for PCA, PHCA, interval, B1-EPG and B1-EPR membership."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .families import Family
from .graph import Graph, find_asteroidal_triple, is_connected, perfect_elimination_ordering
from .iso import Embedding, b1_epr_obstructions, first_forbidden, find_induced, pca_obstructions, b1_epg_obstructions

YES = "YES"
NO = "NO"

PCA = "PCA"
PHCA = "PHCA"
INTERVAL = "INTERVAL"
B1EPG = "B1EPG"
B1EPR = "B1EPR"


class ClassificationError(ValueError):
    """Input outside the scope of a characterisation (disconnected, or not PCA)."""

    def __init__(self, message: str, verdict: "Verdict | None" = None):
        super().__init__(message)
        self.verdict = verdict


class DisconnectedGraphError(ClassificationError):
    pass


class NotPCAError(ClassificationError):
    pass


@dataclass(frozen=True)
class Verdict:
    decision: str
    class_tag: str
    pattern: Family | None = None
    embedding: Embedding | None = None
    # free-form evidence for YES answers (e.g. a PEO) or for pattern-free NO answers
    evidence: Any = None
    representation: Any = None

    def __bool__(self) -> bool:
        return self.decision == YES

    @property
    def certificate(self) -> dict:
        if self.pattern is not None:
            return {
                "kind": "forbidden-induced-subgraph",
                "pattern": self.pattern.label,
                "family": self.pattern.name,
                "param": self.pattern.param,
                "serpentine": self.pattern.serpentine,
                "embedding": list(self.embedding) if self.embedding is not None else None,
            }
        out: dict[str, Any] = {"kind": "membership"}
        if self.evidence is not None:
            out["evidence"] = self.evidence
        if self.representation is not None:
            out["representation"] = self.representation.to_json()
        return out

    def to_json(self) -> dict:
        return {"class": self.class_tag, "decision": self.decision, "certificate": self.certificate}


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("input graph is disconnected; the characterisations assume connected graphs")


def _scan(g: Graph, tag: str, family: list[Family]) -> Verdict:
    hit = first_forbidden(g, family)
    if hit is None:
        return Verdict(YES, tag, evidence={"scanned": [f.label for f in family]})
    return Verdict(NO, tag, pattern=hit[0], embedding=hit[1])


def is_pca(g: Graph) -> Verdict:
    """Forbidden-family test for proper circular-arc graphs.

    Unlike the other classifiers this accepts disconnected input, since
    several of the forbidden patterns are themselves disconnected.
    """
    return _scan(g, PCA, pca_obstructions(g.n))


def is_interval(g: Graph) -> Verdict:
    _require_connected(g)
    peo = perfect_elimination_ordering(g)
    if peo is None:
        # chordless cycle of the smallest length as the witness
        for k in range(4, g.n + 1):
            emb = find_induced(g, Family("cycle", k).graph())
            if emb is not None:
                return Verdict(NO, INTERVAL, pattern=Family("cycle", k), embedding=emb)
        raise AssertionError("non-chordal graph without an induced long cycle")  # pragma: no cover
    at = find_asteroidal_triple(g)
    if at is not None:
        return Verdict(NO, INTERVAL, evidence={"asteroidal_triple": list(at)})
    return Verdict(YES, INTERVAL, evidence={"perfect_elimination_ordering": peo})


def is_phca(g: Graph) -> Verdict:
    _require_connected(g)
    pca = is_pca(g)
    if not pca:
        return Verdict(NO, PHCA, pattern=pca.pattern, embedding=pca.embedding)
    return _scan(g, PHCA, [Family("wheel", 4), Family("sun3")])


def _require_pca(g: Graph, tag: str) -> None:
    _require_connected(g)
    pca = is_pca(g)
    if not pca:
        raise NotPCAError(
            f"{tag} characterisation needs a PCA graph; found induced {pca.pattern.label}", pca
        )


def classify_b1_epg(g: Graph, build: bool = False) -> Verdict:
    """B1-EPG membership for a connected PCA graph.

    With ``build=True`` a YES verdict carries a constructed representation.
    """
    _require_pca(g, "B1-EPG")
    verdict = _scan(g, B1EPG, b1_epg_obstructions(g.n))
    if verdict and build:
        from .builder import build_b1_epg

        return Verdict(YES, B1EPG, evidence=verdict.evidence, representation=build_b1_epg(g, check=False))
    return verdict


def classify_b1_epr(g: Graph, build: bool = False) -> Verdict:
    _require_pca(g, "B1-EPR")
    verdict = _scan(g, B1EPR, b1_epr_obstructions(g.n))
    if verdict and build:
        from .builder import build_b1_epr

        return Verdict(YES, B1EPR, evidence=verdict.evidence, representation=build_b1_epr(g, check=False))
    return verdict


CLASSIFIERS = {
    "pca": is_pca,
    "interval": is_interval,
    "phca": is_phca,
    "b1epg": classify_b1_epg,
    "b1epr": classify_b1_epr,
}
