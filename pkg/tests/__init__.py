"""Test suite for quadform-diag."""
