from .urn_model import RoundTripReport, Translation, TranslationDirection, UrnModel, compose

__all__ = ["RoundTripReport", "Translation", "TranslationDirection", "UrnModel", "compose"]
