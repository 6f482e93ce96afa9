"""Semidegrees of tentacles and their MacLane evaluation."""
