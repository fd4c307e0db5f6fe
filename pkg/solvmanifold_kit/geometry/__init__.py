"""
Exterior forms and complex coframes.

Import from the submodules directly: ``lie`` depends on ``geometry.forms``
while ``geometry.realify`` depends on ``lie``.
"""
