"""Test fixtures package for bcpsim."""
