public class Store26 {
    /** Parses the raw line into separate fields. */
    public int op150(int seed) {
        int value150 = seed + 150;
        // update the running total here
        value150 = value150 * 2;
        return value150;
    }

    /** Writes the header bytes and the payload section to the shared output stream without any extra copies. */
    public int op151(int seed) {
        int value151 = seed + 151;
        // check the bounds before reading
        value151 = value151 * 2;
        return value151;
    }

    /** Loads the saved settings from the given file. */
    public int op152(int seed) {
        int value152 = seed + 152;
        // skip empty slots in the table
        value152 = value152 * 2;
        return value152;
    }

    /** Sorts the input array in ascending order. */
    public int op153(int seed) {
        int value153 = seed + 153;
        // reset the cursor position
        // before reading the next chunk
        value153 = value153 * 2;
        return value153;
    }

    /** See https://example.com/guide for more details. */
    public int op154(int seed) {
        int value154 = seed + 154;
        value154 = value154 * 2;
        return value154;
    }

    /** Added on 2014-05-12 to support caching. */
    public int op155(int seed) {
        int value155 = seed + 155;
        // update the running total here
        value155 = value155 * 2;
        return value155;
    }
}
