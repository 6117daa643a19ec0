class SizeLimitError(Exception):
    """Raised when an input exceeds a documented computational size limit."""
