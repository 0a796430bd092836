from .errors import (
    InvalidObjectError,
    NotGammaFreeError,
    NotCompleteForestError,
    CommonRiseError,
    ForestClassError,
    SizeLimitError,
)
from .matrix import BinaryMatrix, Position, parse_matrix, render_matrix
from .callan import CallanPair, CallanSequence, min_row_key, is_partition_sequence
from .forest import LabeledForest, canonicalize_forest
from .permpair import PermPair, PointSequence, Point, first_coordinate, eta_points
from .records import (
    CallanPairRecord,
    CallanSequenceRecord,
    ForestNodeRecord,
    PermPairRecord,
    callan_to_record,
    callan_from_record,
    parse_callan_json,
    forest_to_records,
    forest_from_records,
    parse_forest_json,
    permpair_to_record,
)
