from .pipeline import ACResult, enforce_ac, is_arc_consistent

__all__ = ['ACResult', 'enforce_ac', 'is_arc_consistent']
