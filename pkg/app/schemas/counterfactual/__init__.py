from .prepared_state import PreparedState, TranscriptRecord

__all__ = ["PreparedState", "TranscriptRecord"]
