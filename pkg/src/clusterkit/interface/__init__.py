"""CLI, JSON/DOT serialization and the local explorer service."""
