"""Sample GraphFiles and the reproduction script."""
