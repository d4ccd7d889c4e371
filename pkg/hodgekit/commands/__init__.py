"""
Command handlers, keyed by command name. cli.py hands this table to the Runner.
"""

from .checks import handle_check
from .invariants import handle_ci, handle_classify, handle_cover, handle_wps
from .planes import handle_fano

HANDLERS = {
    "ci": handle_ci,
    "cover": handle_cover,
    "wps": handle_wps,
    "fano": handle_fano,
    "classify": handle_classify,
    "check": handle_check,
}
