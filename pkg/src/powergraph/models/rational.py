from fractions import Fraction
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise ValueError(f"cannot read {value!r} as an exact rational")


# racionais exatos serializados como "p/q" (ou "p" quando inteiros)
Rational = Annotated[
    Fraction,
    PlainValidator(_to_fraction),
    PlainSerializer(lambda value: str(value), return_type=str),
]
