from ._10_specfile import SpecDocument, IetStanza, FamilyStanza, parse_spec, \
    load_spec, serialize_spec
