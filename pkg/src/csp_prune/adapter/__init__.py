from .text_format import (
    parse_instance,
    parse_pattern,
    parse_schedule,
    parse_trace,
    serialize_instance,
    serialize_pattern,
    serialize_schedule,
    serialize_trace,
)

__all__ = [
    'parse_instance',
    'parse_pattern',
    'parse_schedule',
    'parse_trace',
    'serialize_instance',
    'serialize_pattern',
    'serialize_schedule',
    'serialize_trace',
]
