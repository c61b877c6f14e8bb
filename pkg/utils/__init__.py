"""Shared plumbing: project logging (`utils.logger`) and settings (`utils.config`)."""
