# src/jobs/__init__.py
# Job & queue manager package

from .job_queue import Job, JobStatus, JobQueue, QueueView

__all__ = ['Job', 'JobStatus', 'JobQueue', 'QueueView']
