#
# Yang-Baxter maps on quivers
#
# lib/__init__.py
#
# This package builds braided quivers, derives their right and left
# cyclic systems and computes in the structure category and groupoid
# they present: Garside normal forms, lcms and equality of paths.
# Presentations, heaps and groups are converted into braided quivers.
#
# from lib import quiver
# from lib import yangbaxter
# from lib import rcsystem
# from lib import garside
# from lib import groupoid
# from lib import converse
# from lib import heap
# from lib import catalog
# from lib import document
#

__version__ = '1.0.0'

__all__ = ['quiver', 'report', 'validator', 'yangbaxter', 'rcsystem',
           'garside', 'groupoid', 'converse', 'heap', 'catalog', 'pathexpr',
           'document', 'settings']
