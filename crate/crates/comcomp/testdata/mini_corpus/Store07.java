public class Store07 {
    /** Removes all expired entries from the cache. */
    public int op036(int seed) {
        int value36 = seed + 36;
        // check the bounds before reading
        value36 = value36 * 2;
        return value36;
    }

    /** Updates the internal counter after each call. The result may be negative. */
    public int op037(int seed) {
        int value37 = seed + 37;
        // skip empty slots in the table
        value37 = value37 * 2;
        return value37;
    }

    /** Parses the raw line into separate fields. */
    public int op038(int seed) {
        int value38 = seed + 38;
        // reset the cursor position
        // before reading the next chunk
        value38 = value38 * 2;
        return value38;
    }

    /** Writes the header bytes and the payload section to the shared output stream without any extra copies. */
    public int op039(int seed) {
        int value39 = seed + 39;
        value39 = value39 * 2;
        return value39;
    }

    /** Loads the saved settings from the given file. */
    public int op040(int seed) {
        int value40 = seed + 40;
        // update the running total here
        value40 = value40 * 2;
        return value40;
    }

    /** Sorts the input array in ascending order. */
    public int op041(int seed) {
        int value41 = seed + 41;
        // check the bounds before reading
        value41 = value41 * 2;
        return value41;
    }
}
