"""Tensor-plus calculus: string diagrams with exact matrix semantics."""
