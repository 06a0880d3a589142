"""Contact-surface geometry: traction fields, hulls, centroids and ZMP stability."""
