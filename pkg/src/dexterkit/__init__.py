"""dexterkit: an executable algebra of hypertext documents.

Pages carry typed anchors, links connect anchors across documents, and
whole documents compose by insertion. Everything is an immutable term;
every editing operation returns a new value or raises
:class:`~dexterkit.errors.Unspecified` where the algebra has no answer.
"""

from .anchor import (Anchor, AnchorType, add_anchor_attrs, anchor_max,
                     ch_anchor_type, ch_location, del_anchor_attrs, mk_anchor)
from .attributes import (AttrSet, EMPTY_ATTRS, concat_attrs, mk_attrs,
                         remove_attrs)
from .containers import (EMPTY_MAP, EMPTY_SET, FiniteMap, FiniteSet, RoseTree,
                         canonical_key, is_proper_prefix, mk_tree, nth, rep,
                         zip_with_defaults)
from .errors import Unspecified
from .hyperdoc import (HdParams, HyperDoc, accepting_rule, add_anchor,
                       add_doc_attrs, add_link, anchor_by_name, ch_addr,
                       del_anchor, del_doc_attrs, del_link, evaluate_add_link,
                       mk_hd, names_of_anchor)
from .hypermedia import (HMD_PARAMS, add_hmd_link, combine_links, insert_hmd,
                         insert_hmd_extend, integrate, mk_hmd, sink_location)
from .link import (BI, ActuateType, BiType, INCLUDE_LINK, JUMP_LINK, Link,
                   LinkType, ShowType, Specifier, UniType, add_link_attrs,
                   ch_addr_spec, ch_link_type, ch_name, del_link_attrs,
                   delete_source, delete_target, format_link_type,
                   insert_source, insert_target, link_specifiers, mk_link,
                   mk_specifier, replace_addr_link, replace_addr_spec)
from .page import (EmptyPage, Location, MT_PAGE, MediaObject, MediaPage,
                   Page, PageNode, Struct, SymbolPage, add_page_attrs,
                   att_of, change_struct, del_page_attrs, dimension,
                   dimension_list, has_location, has_nth, include_link_ok,
                   insert_at, insert_at_extend, insert_nth_extend, is_atomic,
                   locate, mk_list, mk_mo, mk_page, mk_table, mk_tableline,
                   pages_of, pnth, struct_tree)

__version__ = "0.1.0"
