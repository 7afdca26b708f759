"""Integration tests for component interactions."""