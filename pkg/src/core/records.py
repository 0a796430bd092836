# src/core/records.py
"""Structured (JSON) records for the domain objects."""
from __future__ import annotations

import json
from typing import Annotated, Any, Callable, List, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from .callan import CallanPair, CallanSequence
from .errors import InvalidObjectError
from .forest import KeyFn, LabeledForest
from .permpair import PermPair, Point


class CallanPairRecord(BaseModel):
    S: List[int]
    T: List[int]


class CallanSequenceRecord(BaseModel):
    n: int
    k: int
    pairs: List[CallanPairRecord]


# a point label is written [x, y]
PointLabel = Annotated[List[int], Field(min_length=2, max_length=2)]


class ForestNodeRecord(BaseModel):
    label: Union[int, PointLabel]
    children: List["ForestNodeRecord"] = []


class PermPairRecord(BaseModel):
    alpha: List[int]
    beta: List[int]


ForestNodeRecord.model_rebuild()


# ---------------------------------------------------------------------- #
# Callan sequences
# ---------------------------------------------------------------------- #
def callan_to_record(s: CallanSequence) -> CallanSequenceRecord:
    # set elements are emitted ascending so output is deterministic
    return CallanSequenceRecord(
        n=s.n,
        k=s.k,
        pairs=[CallanPairRecord(S=sorted(p.rows), T=sorted(p.cols)) for p in s.pairs],
    )


def callan_from_record(record: CallanSequenceRecord) -> CallanSequence:
    return CallanSequence(tuple(CallanPair.of(p.S, p.T) for p in record.pairs), record.n, record.k)


def parse_callan_json(text: str, n: Optional[int] = None, k: Optional[int] = None) -> CallanSequence:
    """
    Accept either a full {"n", "k", "pairs"} record or a bare list of {"S", "T"} pairs.

    Explicit n / k override the record's bounds; a bare list needs both.
    """
    try:
        data = json.loads(text) if text.strip() else []
    except json.JSONDecodeError as e:
        raise InvalidObjectError(f"Callan sequence is not valid JSON: {e}") from e

    try:
        if isinstance(data, list):
            if n is None or k is None:
                raise InvalidObjectError("A bare list of pairs needs explicit n and k")
            record = CallanSequenceRecord(n=n, k=k, pairs=data)
        else:
            record = CallanSequenceRecord.model_validate(data)
            if n is not None:
                record.n = n
            if k is not None:
                record.k = k
    except ValidationError as e:
        raise InvalidObjectError(f"Malformed Callan sequence record: {e}") from e
    return callan_from_record(record)


# ---------------------------------------------------------------------- #
# Forests
# ---------------------------------------------------------------------- #
def _label_out(label: Any) -> Union[int, List[int]]:
    if isinstance(label, tuple):
        return list(label)
    return label


def forest_to_records(f: LabeledForest) -> List[ForestNodeRecord]:
    def build(node: dict) -> ForestNodeRecord:
        return ForestNodeRecord(label=_label_out(node["label"]), children=[build(c) for c in node["children"]])

    return [build(root) for root in f.to_records()]


def forest_from_records(
    records: List[ForestNodeRecord],
    key: Optional[KeyFn] = None,
    label_in: Callable[[Any], Any] = lambda x: Point(*x) if isinstance(x, list) else x,
) -> LabeledForest:
    parent_of: dict = {}

    def walk(node: ForestNodeRecord, parent: Any) -> None:
        try:
            label = label_in(node.label)
        except TypeError as e:
            raise InvalidObjectError(f"Bad forest label {node.label!r}: {e}") from e
        if label in parent_of:
            raise InvalidObjectError(f"Label {label!r} occurs twice")
        parent_of[label] = parent
        for child in node.children:
            walk(child, label)

    for record in records:
        walk(record, None)
    kinds = {type(label).__name__ for label in parent_of}
    if len(kinds) > 1:
        raise InvalidObjectError(f"Forest mixes label kinds: {', '.join(sorted(kinds))}")
    return LabeledForest.from_parents(parent_of, key)


def parse_forest_json(text: str, key: Optional[KeyFn] = None) -> LabeledForest:
    try:
        data = json.loads(text)
        records = [ForestNodeRecord.model_validate(item) for item in data]
    except (json.JSONDecodeError, ValidationError, TypeError) as e:
        raise InvalidObjectError(f"Malformed forest record: {e}") from e
    return forest_from_records(records, key)


def permpair_to_record(p: PermPair) -> PermPairRecord:
    return PermPairRecord(alpha=list(p.alpha), beta=list(p.beta))
