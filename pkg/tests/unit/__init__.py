"""Unit tests package for bcpsim."""

