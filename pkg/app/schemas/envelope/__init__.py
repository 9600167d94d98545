from .envelope import ENVELOPE_VERSION, Envelope, EnvelopeKind

__all__ = ["ENVELOPE_VERSION", "Envelope", "EnvelopeKind"]
