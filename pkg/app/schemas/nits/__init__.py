from .nit_set import CompleteNitSet, nit_shape_errors, product_ground

__all__ = ["CompleteNitSet", "nit_shape_errors", "product_ground"]
