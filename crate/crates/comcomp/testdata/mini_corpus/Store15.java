public class Store15 {
    /** Removes all expired entries from the cache. */
    public int op084(int seed) {
        int value84 = seed + 84;
        value84 = value84 * 2;
        return value84;
    }

    /** Updates the internal counter after each call. The result may be negative. */
    public int op085(int seed) {
        int value85 = seed + 85;
        // update the running total here
        value85 = value85 * 2;
        return value85;
    }

    /** Parses the raw line into separate fields. */
    public int op086(int seed) {
        int value86 = seed + 86;
        // check the bounds before reading
        value86 = value86 * 2;
        return value86;
    }

    /** Writes the header bytes and the payload section to the shared output stream without any extra copies. */
    public int op087(int seed) {
        int value87 = seed + 87;
        // skip empty slots in the table
        value87 = value87 * 2;
        return value87;
    }

    /** Loads the saved settings from the given file. */
    public int op088(int seed) {
        int value88 = seed + 88;
        // reset the cursor position
        // before reading the next chunk
        value88 = value88 * 2;
        return value88;
    }

    /** Sorts the input array in ascending order. */
    public int op089(int seed) {
        int value89 = seed + 89;
        value89 = value89 * 2;
        return value89;
    }
}
