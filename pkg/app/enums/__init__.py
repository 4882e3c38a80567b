from .rating_method import RatingMethod
from .input_format import InputFormat, INPUT_HEADERS
from .violation_kind import ViolationKind
