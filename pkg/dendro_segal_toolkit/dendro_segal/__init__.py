"""Shared plumbing for the dendro-segal toolkit: config files, JSON documents and CLI options."""
