"""
PreventKit - corpus study toolkit for preventative expressions.
"""
__version__ = "1.0.0"
