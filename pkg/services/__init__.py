# Mathematical services and the suite registry
