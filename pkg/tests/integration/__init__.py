"""Integration tests package for bcpsim."""

