# Tests for gldouble
