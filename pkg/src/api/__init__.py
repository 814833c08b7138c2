# HTTP service
