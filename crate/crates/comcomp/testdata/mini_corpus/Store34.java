public class Store34 {
    /** Parses the raw line into separate fields. */
    public int op198(int seed) {
        int value198 = seed + 198;
        // reset the cursor position
        // before reading the next chunk
        value198 = value198 * 2;
        return value198;
    }

    /** Writes the header bytes and the payload section to the shared output stream without any extra copies. */
    public int op199(int seed) {
        int value199 = seed + 199;
        value199 = value199 * 2;
        return value199;
    }

    /** Loads the saved settings from the given file. */
    public int op200(int seed) {
        int value200 = seed + 200;
        // update the running total here
        value200 = value200 * 2;
        return value200;
    }

    /** Sorts the input array in ascending order. */
    public int op201(int seed) {
        int value201 = seed + 201;
        // check the bounds before reading
        value201 = value201 * 2;
        return value201;
    }

    /** See https://example.com/guide for more details. */
    public int op202(int seed) {
        int value202 = seed + 202;
        // skip empty slots in the table
        value202 = value202 * 2;
        return value202;
    }

    /** Added on 2014-05-12 to support caching. */
    public int op203(int seed) {
        int value203 = seed + 203;
        // reset the cursor position
        // before reading the next chunk
        value203 = value203 * 2;
        return value203;
    }
}
