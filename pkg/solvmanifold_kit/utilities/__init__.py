"""
Shared constants, console helpers, formatters and serialization.
"""
