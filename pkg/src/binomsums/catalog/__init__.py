"""Identity catalog: entries, suite runner, jet oracle, polynomial-shift route."""
