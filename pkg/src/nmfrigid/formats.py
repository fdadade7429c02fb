"""Text formats and certificate documents.

Matrix files carry a "rows cols" header line followed by rows of
whitespace-separated rational tokens; a factorization file is two matrix
blocks separated by a blank line (A then B).  Pattern files start with
"m n r", then the A-pattern as m lines over {'.', '0'}, a blank line, and
the B-pattern as r lines ('0' marks a forced zero).  Certificates
serialize to a single JSON tree with string keys; rationals are written as
"p" or "p/q" strings so nothing is ever rounded.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from . import __version__
from .cone import PositiveCombinationWitness
from .cpr import SymmetricFactor, build_skew_generators
from .exactlin import RationalMatrix, matvec
from .patterns import ZeroPattern
from .rigidity import (
    Classification,
    FactorizationPair,
    RigidityCertificate,
    build_dual_generators,
    rank,
)


class ParseError(ValueError):
    pass


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(token: str) -> Fraction:
    """Parse 'p' or 'p/q' with a positive integer denominator."""
    if not _RATIONAL_RE.match(token):
        raise ParseError(f"not a rational token: {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in {token!r}") from exc


def format_rational(value: Fraction) -> str:
    return str(value)


def _blocks(text: str) -> list[list[str]]:
    blocks: list[list[str]] = []
    current: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if line:
            current.append(line)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    return blocks


def _matrix_from_block(lines: list[str]) -> RationalMatrix:
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"matrix header must be 'rows cols', got {lines[0]!r}")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError as exc:
        raise ParseError(f"bad matrix header {lines[0]!r}") from exc
    if len(lines) - 1 != rows:
        raise ParseError(f"expected {rows} matrix rows, found {len(lines) - 1}")
    data = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != cols:
            raise ParseError(f"expected {cols} entries per row, got {len(tokens)} in {line!r}")
        data.extend(parse_rational(tok) for tok in tokens)
    return RationalMatrix(rows, cols, tuple(data))


def load_matrix(text: str) -> RationalMatrix:
    blocks = _blocks(text)
    if len(blocks) != 1:
        raise ParseError(f"matrix file must contain one block, found {len(blocks)}")
    return _matrix_from_block(blocks[0])


def dump_matrix(matrix: RationalMatrix) -> str:
    lines = [f"{matrix.rows} {matrix.cols}"]
    for i in range(matrix.rows):
        lines.append(" ".join(format_rational(x) for x in matrix.row(i)))
    return "\n".join(lines) + "\n"


def load_factorization(text: str) -> FactorizationPair:
    blocks = _blocks(text)
    if len(blocks) != 2:
        raise ParseError(
            f"factorization file must contain two blocks (A, blank line, B), found {len(blocks)}"
        )
    a = _matrix_from_block(blocks[0])
    b = _matrix_from_block(blocks[1])
    return FactorizationPair(a, b)


def dump_factorization(pair: FactorizationPair) -> str:
    return dump_matrix(pair.a) + "\n" + dump_matrix(pair.b)


def load_symmetric_factor(text: str) -> SymmetricFactor:
    blocks = _blocks(text)
    if len(blocks) != 1:
        raise ParseError(f"symmetric factor file must contain one block, found {len(blocks)}")
    return SymmetricFactor(_matrix_from_block(blocks[0]))


def dump_symmetric_factor(factor: SymmetricFactor) -> str:
    return dump_matrix(factor.a)


def load_pattern(text: str) -> ZeroPattern:
    blocks = _blocks(text)
    if len(blocks) != 2:
        raise ParseError("pattern file must contain a header+A block, blank line, B block")
    header = blocks[0][0].split()
    if len(header) != 3:
        raise ParseError(f"pattern header must be 'm n r', got {blocks[0][0]!r}")
    try:
        m, n, r = (int(tok) for tok in header)
    except ValueError as exc:
        raise ParseError(f"bad pattern header {blocks[0][0]!r}") from exc
    a_lines = blocks[0][1:]
    b_lines = blocks[1]
    if len(a_lines) != m or len(b_lines) != r:
        raise ParseError(f"expected {m} A-rows and {r} B-rows, got {len(a_lines)} and {len(b_lines)}")

    def decode(lines: list[str], width: int) -> tuple[tuple[bool, ...], ...]:
        rows = []
        for line in lines:
            if len(line) != width or any(ch not in ".0" for ch in line):
                raise ParseError(f"pattern row must be {width} chars over '.0', got {line!r}")
            rows.append(tuple(ch == "0" for ch in line))
        return tuple(rows)

    return ZeroPattern(m, n, r, decode(a_lines, r), decode(b_lines, n))


def dump_pattern(pattern: ZeroPattern) -> str:
    lines = [f"{pattern.m} {pattern.n} {pattern.r}"]
    for row in pattern.zeros_a:
        lines.append("".join("0" if x else "." for x in row))
    lines.append("")
    for row in pattern.zeros_b:
        lines.append("".join("0" if x else "." for x in row))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Certificate documents
# ---------------------------------------------------------------------------

def _matrix_tree(matrix: RationalMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in matrix.row(i)] for i in range(matrix.rows)]


def certificate_to_document(
    cert: RigidityCertificate,
    input_shape: dict,
    flags: dict | None = None,
    seed: int | None = None,
) -> dict:
    """Self-describing JSON tree for one certificate."""
    witness = None
    if cert.relint_witness is not None:
        witness = [format_rational(c) for c in cert.relint_witness.coefficients]
    v_basis = None
    if cert.v_basis is not None:
        v_basis = [_matrix_tree(mat) for mat in cert.v_basis]
    return {
        "tool": "nmfrigid",
        "version": __version__,
        "kind": "rigidity-certificate",
        "input": dict(input_shape),
        "flags": dict(flags or {}),
        "seed": seed,
        "certificate": {
            "symmetric": cert.symmetric,
            "classification": cert.classification.value,
            "inner_rank": cert.r,
            "ambient_dim": cert.ambient_dim,
            "generator_count": cert.generator_count,
            "span_rank": cert.span_rank,
            "lineality_dim": cert.lineality_dim,
            "dim_w": cert.dim_w,
            "kruskal_rank": cert.kruskal_rank,
            "relint_witness": witness,
            "v_basis": v_basis,
            "v_support": [list(entry) for entry in cert.v_support()] or None,
        },
    }


def document_to_certificate(doc: dict) -> RigidityCertificate:
    """Rebuild the certificate object from its JSON tree (lossless)."""
    body = doc["certificate"]
    witness = None
    if body["relint_witness"] is not None:
        witness = PositiveCombinationWitness(
            tuple(parse_rational(tok) for tok in body["relint_witness"])
        )
    v_basis = None
    if body["v_basis"] is not None:
        mats = []
        for tree in body["v_basis"]:
            rows = [[parse_rational(tok) for tok in row] for row in tree]
            mats.append(RationalMatrix.from_rows(rows))
        v_basis = tuple(mats)
    return RigidityCertificate(
        r=body["inner_rank"],
        ambient_dim=body["ambient_dim"],
        generator_count=body["generator_count"],
        span_rank=body["span_rank"],
        lineality_dim=body["lineality_dim"],
        relint_witness=witness,
        dim_w=body["dim_w"],
        classification=Classification(body["classification"]),
        v_basis=v_basis,
        kruskal_rank=body["kruskal_rank"],
        symmetric=body["symmetric"],
    )


def verify_certificate_document(doc: dict, subject) -> bool:
    """Re-check a document against the factorization it certifies.

    Recomputes the generators from `subject` (a FactorizationPair or
    SymmetricFactor), confirms the recorded span rank, confirms that the
    recorded witness combines the generators exactly to zero with all
    coefficients >= 1, and checks dim_w consistency.  Raises ValueError
    with the first discrepancy, returns True otherwise.
    """
    cert = document_to_certificate(doc)
    if isinstance(subject, SymmetricFactor):
        gens = build_skew_generators(subject)
    else:
        gens = build_dual_generators(subject)
    if gens.count != cert.generator_count:
        raise ValueError(
            f"generator count mismatch: document {cert.generator_count}, input {gens.count}"
        )
    span = rank(gens.matrix()) if gens.count else 0
    if span != cert.span_rank:
        raise ValueError(f"span rank mismatch: document {cert.span_rank}, recomputed {span}")
    if cert.dim_w != cert.ambient_dim - cert.lineality_dim:
        raise ValueError("dim_w inconsistent with ambient_dim - lineality_dim")
    if cert.relint_witness is not None:
        coeffs = cert.relint_witness.coefficients
        if len(coeffs) != gens.count:
            raise ValueError("witness length does not match generator count")
        if any(c < 1 for c in coeffs):
            raise ValueError("witness coefficient below 1")
        if gens.count:
            combo = matvec(gens.matrix(), coeffs)
            if any(x != 0 for x in combo):
                raise ValueError("witness combination is not exactly zero")
        if cert.lineality_dim != cert.span_rank:
            raise ValueError("witness present but lineality differs from span rank")
    return True


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"
