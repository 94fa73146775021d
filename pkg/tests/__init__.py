"""motivic-zeta tests."""
