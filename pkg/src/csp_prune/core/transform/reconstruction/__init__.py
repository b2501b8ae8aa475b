from .extend import ExtensionContext, btp_value, extend_btp, extend_via_t, extension_context, reassignment
from .pipeline import recover_all, recover_one

__all__ = [
    'ExtensionContext',
    'btp_value',
    'extend_btp',
    'extend_via_t',
    'extension_context',
    'reassignment',
    'recover_all',
    'recover_one',
]
