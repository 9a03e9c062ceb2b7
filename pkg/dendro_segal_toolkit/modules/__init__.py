"""Library packages, one per area, each shipping a suite module with its acceptance checks."""
