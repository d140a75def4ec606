# k3census/engine/errors.py
from typing import Dict, Iterable, Tuple


class AnalysisError(Exception):
    """
    Raised when a weight system cannot be given a Du Val basket.
    Every subclass names one failure mode; ``indices`` are the coordinate
    indices (0-based, into the sorted weights) of the offending stratum.
    """
    kind = "AnalysisError"

    def __init__(self, message: str, indices: Iterable[int] = ()):
        super().__init__(message)
        self.indices: Tuple[int, ...] = tuple(indices)

    def to_dict(self) -> Dict:
        return {"error": self.kind, "indices": list(self.indices), "message": str(self)}


class NotWellFormed(AnalysisError):
    kind = "NotWellFormed"


class NotSurfaceCodimension(AnalysisError):
    kind = "NotSurfaceCodimension"


class ContainedSingularStratum(AnalysisError):
    kind = "ContainedSingularStratum"


class NonIsolatedSingularLocus(AnalysisError):
    kind = "NonIsolatedSingularLocus"


class QuasismoothnessFailureAtVertex(AnalysisError):
    kind = "QuasismoothnessFailureAtVertex"


class NonDuValPoint(AnalysisError):
    kind = "NonDuValPoint"


class RankBoundViolation(AnalysisError):
    kind = "RankBoundViolation"


class UnsupportedInput(AnalysisError):
    kind = "UnsupportedInput"
