# Multiobjective trust-region solver
