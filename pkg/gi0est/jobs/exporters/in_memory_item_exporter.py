class InMemoryItemExporter:
    """Keeps exported items per type, after the same converters a file exporter would apply."""

    def __init__(self, item_types, converters=()):
        self.item_types = item_types
        self.converters = converters or ()
        self.items = {}

    def open(self):
        self.items = dict((item_type, []) for item_type in self.item_types)

    def export_items(self, items):
        for item in items:
            self.export_item(item)

    def export_item(self, item):
        item_type = item.get('type', None)
        if item_type not in self.items:
            raise ValueError('Item type {} is not one of {} in item {}'.format(item_type, self.item_types, repr(item)))
        for converter in self.converters:
            item = converter.convert_item(item)
        self.items[item_type].append(item)

    def close(self):
        pass

    def get_items(self, item_type):
        return self.items[item_type]
