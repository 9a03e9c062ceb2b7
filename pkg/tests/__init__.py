"""Tests for the dendro-segal toolkit."""
