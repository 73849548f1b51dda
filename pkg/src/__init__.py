"""cpxcp: classification of groups whose central quotient is C_p x C_p."""

__version__ = "1.0.0"
__author__ = "cpxcp contributors"
