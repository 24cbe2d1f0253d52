"""Xd-C to MSVL transpiler, reference interpreters and differential harness."""
