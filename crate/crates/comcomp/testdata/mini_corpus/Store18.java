public class Store18 {
    /** Parses the raw line into separate fields. */
    public int op102(int seed) {
        int value102 = seed + 102;
        // skip empty slots in the table
        value102 = value102 * 2;
        return value102;
    }

    /** Writes the header bytes and the payload section to the shared output stream without any extra copies. */
    public int op103(int seed) {
        int value103 = seed + 103;
        // reset the cursor position
        // before reading the next chunk
        value103 = value103 * 2;
        return value103;
    }

    /** Loads the saved settings from the given file. */
    public int op104(int seed) {
        int value104 = seed + 104;
        value104 = value104 * 2;
        return value104;
    }

    /** Sorts the input array in ascending order. */
    public int op105(int seed) {
        int value105 = seed + 105;
        // update the running total here
        value105 = value105 * 2;
        return value105;
    }

    /** See https://example.com/guide for more details. */
    public int op106(int seed) {
        int value106 = seed + 106;
        // check the bounds before reading
        value106 = value106 * 2;
        return value106;
    }

    /** Added on 2014-05-12 to support caching. */
    public int op107(int seed) {
        int value107 = seed + 107;
        // skip empty slots in the table
        value107 = value107 * 2;
        return value107;
    }
}
