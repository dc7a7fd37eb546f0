"""kmaj: the k-major index interpolating between maj and inv."""
