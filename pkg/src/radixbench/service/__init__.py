"""HTTP service wrapping the workbench: request/response models, handlers, app."""
