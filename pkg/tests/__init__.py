# Tests for the multiobjective trust-region solver
