// serialization: implemented in later build step
